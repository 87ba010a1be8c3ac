//! 2×2 integer matrices acting on column vectors.

use crate::error::{Error, Result};

pub type Mat2 = [[i64; 2]; 2];

pub const IDENTITY: Mat2 = [[1, 0], [0, 1]];

pub fn det(m: Mat2) -> i64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

pub fn mul(a: Mat2, b: Mat2) -> Mat2 {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

pub fn transpose(m: Mat2) -> Mat2 {
    [[m[0][0], m[1][0]], [m[0][1], m[1][1]]]
}

/// Inverse of a unimodular matrix.
pub fn inverse(m: Mat2) -> Result<Mat2> {
    let d = det(m);
    if d != 1 && d != -1 {
        return Err(Error::NotUnimodular(m, d));
    }
    Ok([[m[1][1] * d, -m[0][1] * d], [-m[1][0] * d, m[0][0] * d]])
}

pub fn apply(m: Mat2, v: (i64, i64)) -> (i64, i64) {
    (m[0][0] * v.0 + m[0][1] * v.1, m[1][0] * v.0 + m[1][1] * v.1)
}

pub fn check_unimodular(m: Mat2) -> Result<()> {
    let d = det(m);
    if d == 1 || d == -1 {
        Ok(())
    } else {
        Err(Error::NotUnimodular(m, d))
    }
}
