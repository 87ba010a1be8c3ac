//! Integer homology of pieces and closed gluings, and the abelian character sets they determine.

pub mod presentation;
pub mod snf;

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::torus_sets::{character_lines, distance, mat2, q, qi, Mat2, Point, Slope, TorusLine, TorusSet, Turn, Q};
pub use presentation::{Letter, Port, PresentationData, Word};
pub use snf::{cokernel_factors, smith_normal_form, Snf};

/// Rational longitude of a boundary port with its order `o` and the torsion order `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LongitudeData {
    #[serde(serialize_with = "ser_slope")]
    pub longitude: Slope,
    pub order: u64,
    pub torsion: u64,
}

fn ser_slope<S: serde::Serializer>(s: &Slope, ser: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeTuple;
    let mut t = ser.serialize_tuple(2)?;
    t.serialize_element(&s.a)?;
    t.serialize_element(&s.b)?;
    t.end()
}

/// `|H₁|` of a closed 3-manifold: finite or infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum H1Order {
    Finite(u64),
    Infinite,
}

impl fmt::Display for H1Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            H1Order::Finite(n) => write!(f, "{n}"),
            H1Order::Infinite => write!(f, "infinite"),
        }
    }
}

impl H1Order {
    pub fn is_qhs(self) -> bool {
        matches!(self, H1Order::Finite(_))
    }
}

/// Diagonalized `H₁` of a piece with one marked port.
///
/// Coordinates are `y = w·V`; coordinate `i` lives in `ℤ/dᵢ` (`dᵢ = 0` means free).
#[derive(Clone, Debug)]
pub struct AbelianStructure {
    pub diag: Vec<i64>,
    pub x: Vec<i64>,
    pub h: Vec<i64>,
    pub free: usize,
}

impl AbelianStructure {
    pub fn of(pd: &PresentationData, port: usize) -> Result<AbelianStructure> {
        if port >= pd.ports.len() {
            return Err(Error::PortOutOfRange("presentation".into(), port));
        }
        let n = pd.rank();
        let s = smith_normal_form(&pd.relator_matrix(), n);
        let mut diag = vec![0; n];
        diag[..s.diag.len()].copy_from_slice(&s.diag);
        let (xv, hv) = pd.boundary_vectors(port);
        let x = row_times(&xv, &s.v);
        let h = row_times(&hv, &s.v);
        let frees: Vec<usize> = (0..n).filter(|&i| diag[i] == 0).collect();
        if frees.len() != 1 {
            return Err(Error::NotQhsComplement(format!("free rank {}", frees.len())));
        }
        let free = frees[0];
        if x[free] == 0 && h[free] == 0 {
            return Err(Error::NotQhsComplement("boundary carries no free class".into()));
        }
        Ok(AbelianStructure { diag, x, h, free })
    }

    /// Indices of nontrivial finite cyclic factors.
    pub fn torsion_indices(&self) -> Vec<usize> {
        (0..self.diag.len()).filter(|&i| self.diag[i] > 1).collect()
    }

    pub fn torsion(&self) -> u64 {
        self.torsion_indices().iter().map(|&i| self.diag[i] as u64).product()
    }

    pub fn longitude(&self) -> Slope {
        let (xf, hf) = (self.x[self.free], self.h[self.free]);
        Slope::canonical_with_sign(hf, -xf).0
    }

    /// Enumerates all torsion characters as offset vectors `(Σ kᵢXᵢ/dᵢ, Σ kᵢHᵢ/dᵢ)` with their values `kᵢ/dᵢ`.
    fn for_each_torsion_character(&self, mut f: impl FnMut(&[Q], Point) -> bool) {
        let idx = self.torsion_indices();
        let mut k = vec![0i64; idx.len()];
        loop {
            let vals: Vec<Q> = idx.iter().zip(&k).map(|(&i, &ki)| q(ki, self.diag[i])).collect();
            let mut u = Q::from_integer(0);
            let mut v = Q::from_integer(0);
            for (j, &i) in idx.iter().enumerate() {
                u += vals[j] * qi(self.x[i]);
                v += vals[j] * qi(self.h[i]);
            }
            if !f(&vals, (Turn::new(u), Turn::new(v))) {
                return;
            }
            let mut c = 0;
            loop {
                if c == idx.len() {
                    return;
                }
                k[c] += 1;
                if k[c] < self.diag[idx[c]] {
                    break;
                }
                k[c] = 0;
                c += 1;
            }
        }
    }
}

fn row_times(w: &[i64], v: &[Vec<i64>]) -> Vec<i64> {
    let n = v.first().map_or(0, |r| r.len());
    (0..n).map(|j| w.iter().zip(v).map(|(a, row)| a * row[j]).sum()).collect()
}

/// Rational longitude, its order and the torsion order at `port`.
pub fn longitude_of(pd: &PresentationData, port: usize) -> Result<LongitudeData> {
    let st = AbelianStructure::of(pd, port)?;
    let lam = st.longitude();
    let mut order: u64 = 1;
    for i in st.torsion_indices() {
        let d = st.diag[i];
        let y = (lam.a * st.x[i] + lam.b * st.h[i]).rem_euclid(d);
        order = order.lcm(&((d / d.gcd(&y)) as u64));
    }
    Ok(LongitudeData { longitude: lam, order, torsion: st.torsion() })
}

/// `o₁o₂t₁t₂·Δ(λ₁, G·λ₂)` where `G` maps side-2 coordinates to side-1 coordinates.
pub fn closed_h1_order(l1: &LongitudeData, l2: &LongitudeData, gluing: Mat2) -> H1Order {
    let (a, b) = mat2::apply(gluing, (l2.longitude.a, l2.longitude.b));
    let d = distance(l1.longitude, Slope::from_vector(a, b));
    if d == 0 {
        H1Order::Infinite
    } else {
        H1Order::Finite(l1.order * l2.order * l1.torsion * l2.torsion * d as u64)
    }
}

/// `|H₁|` of a presentation with no open ports, by Smith normal form.
pub fn h1_order(pd: &PresentationData) -> H1Order {
    let f = cokernel_factors(&pd.relator_matrix(), pd.rank());
    if f.contains(&0) {
        H1Order::Infinite
    } else {
        H1Order::Finite(f.iter().map(|&d| d as u64).product())
    }
}

/// Invariant factors of `H₁` other than 1; `0` denotes a free summand.
pub fn h1_factors(pd: &PresentationData) -> Vec<i64> {
    let mut f = cokernel_factors(&pd.relator_matrix(), pd.rank());
    f.retain(|&d| d != 1);
    f.sort_by_key(|&d| if d == 0 { i64::MAX } else { d });
    f
}

/// Boundary restrictions of abelian characters: `o` parallel lines with normal `λ`.
pub fn abelian_set(pd: &PresentationData, port: usize) -> Result<TorusSet> {
    let l = longitude_of(pd, port)?;
    Ok(character_lines(l.longitude, l.order as u32))
}

/// Torsion characters visited before [`restriction_image`] gives up.
pub const RESTRICTION_ENUMERATION_LIMIT: u64 = 1 << 20;

/// The image of `Hom(H₁(Y), U(1)) → Hom(H₁(∂Y), U(1))`, by enumerating torsion characters.
pub fn restriction_image(pd: &PresentationData, port: usize) -> Result<TorusSet> {
    let st = AbelianStructure::of(pd, port)?;
    if st.torsion() > RESTRICTION_ENUMERATION_LIMIT {
        return Err(Error::NotQhsComplement(format!("torsion {} too large to enumerate", st.torsion())));
    }
    let (xf, hf) = (st.x[st.free], st.h[st.free]);
    let g = xf.gcd(&hf);
    let normal = Slope::canonical_with_sign(hf / g, -xf / g).0;
    let mut lines = BTreeSet::new();
    st.for_each_torsion_character(|_, (u, v)| {
        let c = Turn::new(qi(normal.a) * u.value() + qi(normal.b) * v.value());
        lines.insert(TorusLine::new(normal, c));
        true
    });
    Ok(TorusSet::from_lines(lines))
}

/// Central boundary characters extending to an abelian character whose image is not inside `{±1}`.
pub fn central_extension_set(pd: &PresentationData, port: usize) -> Result<TorusSet> {
    let st = AbelianStructure::of(pd, port)?;
    if st.torsion() > RESTRICTION_ENUMERATION_LIMIT {
        return Err(Error::NotQhsComplement(format!("torsion {} too large to enumerate", st.torsion())));
    }
    let (xf, hf) = (st.x[st.free], st.h[st.free]);
    let is_half_integral = |x: Q| (x * qi(2)).is_integer();
    let mut out = Vec::new();
    for eta in [(Turn::ZERO, Turn::ZERO), (Turn::HALF, Turn::ZERO), (Turn::ZERO, Turn::HALF), (Turn::HALF, Turn::HALF)] {
        let mut found = false;
        st.for_each_torsion_character(|vals, (u, v)| {
            let ru = (eta.0 - u).value();
            let rv = (eta.1 - v).value();
            // ψ_f·X_f ≡ ru and ψ_f·H_f ≡ rv
            let (lead, r_lead, other, r_other) = if xf != 0 { (xf, ru, hf, rv) } else { (hf, rv, xf, ru) };
            for k in 0..lead.abs() {
                let psi = (r_lead + qi(k)) / qi(lead);
                if Turn::new(psi * qi(other)) != Turn::new(r_other) {
                    continue;
                }
                let noncentral = !is_half_integral(psi) || vals.iter().any(|&x| !is_half_integral(x));
                if noncentral {
                    found = true;
                    return false;
                }
            }
            true
        });
        if found {
            out.push(eta);
        }
    }
    Ok(TorusSet::from_points(out))
}

/// The four central characters `{0, 1/2}²`.
pub fn central_points() -> [Point; 4] {
    [(Turn::ZERO, Turn::ZERO), (Turn::HALF, Turn::ZERO), (Turn::ZERO, Turn::HALF), (Turn::HALF, Turn::HALF)]
}
