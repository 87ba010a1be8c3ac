//! Smith normal form over the integers.

#![allow(clippy::needless_range_loop)]

/// `U·A·V = D` with `D` diagonal, `d₁ | d₂ | …`, all `dᵢ ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    /// Diagonal entries, length `min(rows, cols)`.
    pub diag: Vec<i64>,
    pub u: Vec<Vec<i64>>,
    pub v: Vec<Vec<i64>>,
    pub rows: usize,
    pub cols: usize,
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn smith_normal_form(a: &[Vec<i64>], cols: usize) -> Snf {
    let rows = a.len();
    let mut m: Vec<Vec<i64>> = a.to_vec();
    for r in &m {
        assert_eq!(r.len(), cols, "ragged relator matrix");
    }
    let mut u = identity(rows);
    let mut v = identity(cols);
    let k = rows.min(cols);
    for t in 0..k {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if m[i][j] != 0 && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(m, u, v, rows, cols);
            };
            m.swap(t, pi);
            u.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let f = m[i][t] / p;
                if f != 0 {
                    for j in 0..cols {
                        m[i][j] -= f * m[t][j];
                    }
                    for j in 0..rows {
                        u[i][j] -= f * u[t][j];
                    }
                }
                clean &= m[i][t] == 0;
            }
            for j in t + 1..cols {
                let f = m[t][j] / p;
                if f != 0 {
                    for i in 0..rows {
                        m[i][j] -= f * m[i][t];
                    }
                    for i in 0..cols {
                        v[i][j] -= f * v[i][t];
                    }
                }
                clean &= m[t][j] == 0;
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| m[i][j] % p != 0));
            if let Some(i) = bad {
                for j in 0..cols {
                    m[t][j] += m[i][j];
                }
                for j in 0..rows {
                    u[t][j] += u[i][j];
                }
                continue;
            }
            if p < 0 {
                for j in 0..cols {
                    m[t][j] = -m[t][j];
                }
                for j in 0..rows {
                    u[t][j] = -u[t][j];
                }
            }
            break;
        }
    }
    finish(m, u, v, rows, cols)
}

fn finish(m: Vec<Vec<i64>>, u: Vec<Vec<i64>>, v: Vec<Vec<i64>>, rows: usize, cols: usize) -> Snf {
    let k = rows.min(cols);
    let diag = (0..k).map(|i| m[i][i].abs()).collect();
    Snf { diag, u, v, rows, cols }
}

/// Invariant factors of the cokernel `Z^cols / rowspace(A)`: one entry per column, `0` for free summands.
pub fn cokernel_factors(a: &[Vec<i64>], cols: usize) -> Vec<i64> {
    let s = smith_normal_form(a, cols);
    let mut out = vec![0; cols];
    for (i, d) in s.diag.iter().enumerate() {
        out[i] = *d;
    }
    out
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| (0..n).map(|j| row.iter().zip(b).map(|(x, brow)| x * brow[j]).sum()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: Vec<Vec<i64>>, cols: usize) -> Snf {
        let s = smith_normal_form(&a, cols);
        let d = mat_mul(&mat_mul(&s.u, &a), &s.v);
        for (i, row) in d.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if i == j {
                    assert_eq!(x.abs(), s.diag[i]);
                } else {
                    assert_eq!(*x, 0);
                }
            }
        }
        for w in s.diag.windows(2) {
            if w[0] != 0 {
                assert_eq!(w[1] % w[0], 0);
            } else {
                assert_eq!(w[1], 0);
            }
        }
        s
    }

    #[test]
    fn coprime_diagonal() {
        assert_eq!(check(vec![vec![2, 0], vec![0, 3]], 2).diag, vec![1, 6]);
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(check(vec![vec![0, 0], vec![0, 0]], 2).diag, vec![0, 0]);
    }

    #[test]
    fn trefoil_piece_presentation() {
        let s = check(vec![vec![2, 0, 1], vec![0, 3, 1]], 3);
        assert_eq!(s.diag, vec![1, 1]);
        assert_eq!(cokernel_factors(&[vec![2, 0, 1], vec![0, 3, 1]], 3), vec![1, 1, 0]);
    }

    #[test]
    fn mixed() {
        check(vec![vec![4, 6, 2], vec![6, 9, 3], vec![2, 0, 8]], 3);
        check(vec![vec![0, 5], vec![10, 0], vec![3, 3]], 2);
    }
}
