//! Finitely presented groups with marked boundary ports.

use std::fmt;

use crate::torus_sets::Mat2;

/// A generator index raised to a nonzero exponent.
pub type Letter = (usize, i64);

/// A freely reduced word in the generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let mut w = Word(Vec::new());
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn gen(g: usize) -> Word {
        Word(vec![(g, 1)])
    }

    pub fn pow_gen(g: usize, e: i64) -> Word {
        Word::new([(g, e)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|(_, e)| e.unsigned_abs() as usize).sum()
    }

    fn push(&mut self, (g, e): Letter) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.0.last_mut() {
            if last.0 == g {
                last.1 += e;
                if last.1 == 0 {
                    self.0.pop();
                }
                return;
            }
        }
        self.0.push((g, e));
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::default();
        for _ in 0..n.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }

    /// `a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    /// Conjugacy-invariant reduction used for relators.
    pub fn cyclically_reduced(&self) -> Word {
        let mut v = self.0.clone();
        loop {
            if v.len() >= 2 && v[0].0 == v[v.len() - 1].0 {
                let (_, e) = v.pop().unwrap();
                v[0].1 += e;
                if v[0].1 == 0 {
                    v.remove(0);
                }
            } else {
                break;
            }
        }
        Word(v)
    }

    pub fn abelianize(&self, n: usize) -> Vec<i64> {
        let mut out = vec![0; n];
        for &(g, e) in &self.0 {
            out[g] += e;
        }
        out
    }

    /// Replaces every occurrence of generator `g` by `w`.
    pub fn substitute(&self, g: usize, w: &Word) -> Word {
        let mut out = Word::default();
        for &(h, e) in &self.0 {
            if h == g {
                out = out.concat(&w.pow(e));
            } else {
                out.push((h, e));
            }
        }
        out
    }

    fn occurrences(&self, g: usize) -> i64 {
        self.0.iter().filter(|(h, _)| *h == g).map(|(_, e)| e.abs()).sum()
    }

    fn reindex(&self, removed: usize) -> Word {
        Word(self.0.iter().map(|&(h, e)| (if h > removed { h - 1 } else { h }, e)).collect())
    }

    fn shifted(&self, by: usize) -> Word {
        Word(self.0.iter().map(|&(h, e)| (h + by, e)).collect())
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|&(g, e)| if e == 1 { names[g].clone() } else { format!("{}^{}", names[g], e) })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A boundary torus: the two commuting classes of its declared basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Port {
    pub x: Word,
    pub h: Word,
}

/// Generators, relators and boundary ports of a piece or closed manifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationData {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
    pub ports: Vec<Port>,
}

impl fmt::Display for PresentationData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| r.display(&self.generators)).collect();
        write!(f, "<{} | {}>", self.generators.join(", "), rels.join(", "))?;
        for (i, p) in self.ports.iter().enumerate() {
            write!(f, "; port {i}: ({}, {})", p.x.display(&self.generators), p.h.display(&self.generators))?;
        }
        Ok(())
    }
}

impl PresentationData {
    pub fn new(generators: Vec<String>, relators: Vec<Word>, ports: Vec<Port>) -> PresentationData {
        let mut pd = PresentationData { generators, relators, ports };
        pd.clean_relators();
        pd
    }

    /// `⟨x, h | [x, h], x^p h^q⟩` with port `(x, h)`.
    pub fn solid_torus(p: i64, q: i64) -> PresentationData {
        let (x, h) = (Word::gen(0), Word::gen(1));
        let fill = Word::new([(0, p), (1, q)]);
        PresentationData::new(
            vec!["x".into(), "h".into()],
            vec![Word::commutator(&x, &h), fill],
            vec![Port { x, h }],
        )
    }

    /// Pair of pants times a circle: `⟨x₁, x₂, h | [x₁,h], [x₂,h]⟩`, ports `(x₁,h)`, `(x₂,h)`, `(x₁x₂,h)`.
    pub fn c3() -> PresentationData {
        let (x1, x2, h) = (Word::gen(0), Word::gen(1), Word::gen(2));
        PresentationData::new(
            vec!["x1".into(), "x2".into(), "h".into()],
            vec![Word::commutator(&x1, &h), Word::commutator(&x2, &h)],
            vec![
                Port { x: x1.clone(), h: h.clone() },
                Port { x: x2.clone(), h: h.clone() },
                Port { x: x1.concat(&x2), h },
            ],
        )
    }

    /// Twisted circle bundle over the Möbius band minus a disk.
    /// `⟨x₁, x₂, z, h | [x₁,h], [x₂,h], x₁x₂z², zhz⁻¹h⟩`, ports `(x₁,h)`, `(x₂,h)`.
    pub fn c2() -> PresentationData {
        let (x1, x2, z, h) = (Word::gen(0), Word::gen(1), Word::gen(2), Word::gen(3));
        PresentationData::new(
            vec!["x1".into(), "x2".into(), "z".into(), "h".into()],
            vec![
                Word::commutator(&x1, &h),
                Word::commutator(&x2, &h),
                x1.concat(&x2).concat(&z.pow(2)),
                z.concat(&h).concat(&z.inverse()).concat(&h),
            ],
            vec![Port { x: x1, h: h.clone() }, Port { x: x2, h }],
        )
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Abelianized relators, one row per relator.
    pub fn relator_matrix(&self) -> Vec<Vec<i64>> {
        self.relators.iter().map(|r| r.abelianize(self.rank())).collect()
    }

    /// The abelianized port basis `(x, h)` as integer vectors over the generators.
    pub fn boundary_vectors(&self, port: usize) -> (Vec<i64>, Vec<i64>) {
        let p = &self.ports[port];
        (p.x.abelianize(self.rank()), p.h.abelianize(self.rank()))
    }

    fn clean_relators(&mut self) {
        let mut seen = Vec::new();
        for r in std::mem::take(&mut self.relators) {
            let r = r.cyclically_reduced();
            if !r.is_empty() && !seen.contains(&r) && !seen.contains(&r.inverse().cyclically_reduced()) {
                seen.push(r);
            }
        }
        self.relators = seen;
    }

    /// Disjoint free product; ports are concatenated in order. Returns generator offsets.
    pub fn free_product(parts: &[&PresentationData], prefixes: &[&str]) -> (PresentationData, Vec<usize>) {
        let mut gens = Vec::new();
        let mut rels = Vec::new();
        let mut ports = Vec::new();
        let mut offsets = Vec::new();
        for (k, pd) in parts.iter().enumerate() {
            let off = gens.len();
            offsets.push(off);
            let prefix = prefixes.get(k).copied().unwrap_or("");
            gens.extend(pd.generators.iter().map(|g| format!("{prefix}{g}")));
            rels.extend(pd.relators.iter().map(|r| r.shifted(off)));
            ports.extend(pd.ports.iter().map(|p| Port { x: p.x.shifted(off), h: p.h.shifted(off) }));
        }
        (PresentationData { generators: gens, relators: rels, ports }, offsets)
    }

    /// Re-expresses a port in a new basis: the columns of `m` give the new classes in the old basis.
    pub fn change_port_basis(&self, port: usize, m: Mat2) -> PresentationData {
        let mut out = self.clone();
        let p = &self.ports[port];
        let x = p.x.pow(m[0][0]).concat(&p.h.pow(m[1][0]));
        let h = p.x.pow(m[0][1]).concat(&p.h.pow(m[1][1]));
        out.ports[port] = Port { x, h };
        out
    }

    /// Dehn filling: kills `x^a h^b` and removes the port.
    pub fn fill(&self, port: usize, a: i64, b: i64) -> PresentationData {
        let mut out = self.clone();
        let p = out.ports.remove(port);
        out.relators.push(p.x.pow(a).concat(&p.h.pow(b)));
        out.clean_relators();
        out
    }

    /// Identifies port `i` with port `j` (`i ≠ j`) of the same presentation, removing both.
    /// `g` maps `j`-coordinates to `i`-coordinates.
    pub fn identify_ports(&self, i: usize, j: usize, g: Mat2) -> PresentationData {
        assert_ne!(i, j);
        let pi = self.ports[i].clone();
        let pj = self.ports[j].clone();
        let mut out = self.clone();
        let img_x = pi.x.pow(g[0][0]).concat(&pi.h.pow(g[1][0]));
        let img_h = pi.x.pow(g[0][1]).concat(&pi.h.pow(g[1][1]));
        out.relators.push(pj.x.inverse().concat(&img_x));
        out.relators.push(pj.h.inverse().concat(&img_h));
        let (a, b) = if i > j { (i, j) } else { (j, i) };
        out.ports.remove(a);
        out.ports.remove(b);
        out.clean_relators();
        out
    }

    /// Glues port `pa` of `a` to port `pb` of `b`; `g` maps `b`-coordinates to `a`-coordinates.
    /// Remaining ports: those of `a` then those of `b`, in order.
    pub fn glue(a: &PresentationData, pa: usize, b: &PresentationData, pb: usize, g: Mat2) -> PresentationData {
        let (u, _) = PresentationData::free_product(&[a, b], &["a.", "b."]);
        u.identify_ports(pa, a.ports.len() + pb, g)
    }

    /// Tietze moves: repeatedly eliminates a generator occurring exactly once in some relator.
    pub fn simplified(&self) -> PresentationData {
        let mut pd = self.clone();
        pd.clean_relators();
        loop {
            let mut best: Option<(usize, usize, usize)> = None; // (relator, generator, length)
            for (ri, r) in pd.relators.iter().enumerate() {
                for &(g, e) in r.letters() {
                    if e.abs() == 1 && r.occurrences(g) == 1 {
                        let len = r.len();
                        if best.is_none_or(|(_, _, l)| len < l) {
                            best = Some((ri, g, len));
                        }
                    }
                }
            }
            let Some((ri, g, _)) = best else { break };
            let r = pd.relators.remove(ri);
            let pos = r.letters().iter().position(|&(h, _)| h == g).unwrap();
            let (_, e) = r.letters()[pos];
            let rest = Word::new(r.letters()[pos + 1..].iter().chain(&r.letters()[..pos]).copied());
            // g^e · rest = 1
            let value = if e == 1 { rest.inverse() } else { rest };
            let value = value.reindex(g);
            let sub = |w: &Word| w.substitute_then_reindex(g, &value);
            pd.relators = pd.relators.iter().map(sub).collect();
            pd.ports = pd.ports.iter().map(|p| Port { x: sub(&p.x), h: sub(&p.h) }).collect();
            pd.generators.remove(g);
            pd.clean_relators();
        }
        pd
    }
}

impl Word {
    /// Substitutes `g ↦ value` (with `value` already over the reduced index set) and drops index `g`.
    fn substitute_then_reindex(&self, g: usize, value: &Word) -> Word {
        let mut out = Word::default();
        for &(h, e) in &self.0 {
            if h == g {
                out = out.concat(&value.pow(e));
            } else {
                out.push((if h > g { h - 1 } else { h }, e));
            }
        }
        out
    }
}
