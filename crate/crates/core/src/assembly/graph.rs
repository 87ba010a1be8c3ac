//! Validated gluing trees of atomic pieces.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;

use super::document::{GluingSpec, ManifoldDocument, PieceKind, PieceSpec};
use crate::error::{Error, Result};
use crate::pieces::{
    c2_compose, c3_compose, seifert_disk_triple, seifert_mobius_triple, solid_torus_triple, BoundaryTriple,
    SeifertCoefficient,
};
use crate::torus_sets::{mat2, Mat2, Slope};

/// A piece the triple recipes handle directly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    SolidTorus(Slope),
    Disk(Vec<SeifertCoefficient>),
    /// Twisted circle bundle over the Möbius band, no exceptional fibers.
    MobiusTwisted,
    C3,
    C2,
}

impl Atom {
    pub fn port_count(&self) -> usize {
        match self {
            Atom::SolidTorus(_) | Atom::Disk(_) | Atom::MobiusTwisted => 1,
            Atom::C3 => 3,
            Atom::C2 => 2,
        }
    }

    pub fn to_spec(&self, id: &str) -> PieceSpec {
        let (kind, coefficients, ports) = match self {
            Atom::SolidTorus(s) => (PieceKind::SolidTorus, vec![[s.a, s.b]], None),
            Atom::Disk(cs) => (PieceKind::SeifertDisk, cs.iter().map(|c| [c.p, c.q]).collect(), None),
            Atom::MobiusTwisted => (PieceKind::SeifertMobiusPlanar, vec![], Some(1)),
            Atom::C3 => (PieceKind::C3, vec![], None),
            Atom::C2 => (PieceKind::C2, vec![], None),
        };
        PieceSpec { id: id.into(), kind, coefficients, ports }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub id: String,
    pub atom: Atom,
    /// Document piece this node was expanded from.
    pub origin: String,
}

/// `matrix` has the `to` basis as columns written in the `from` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub label: String,
    pub from: (usize, usize),
    pub to: (usize, usize),
    pub matrix: Mat2,
    /// Whether the edge came from a document gluing rather than an expansion.
    pub external: bool,
}

/// A tree of atomic pieces with at most one unglued port.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldGraph {
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
    pub open_port: Option<(usize, usize)>,
    /// Document `(piece, port)` to node port.
    pub port_map: BTreeMap<(String, usize), (usize, usize)>,
}

struct Builder {
    nodes: Vec<Node>,
    edges: Vec<Edge>,
}

impl Builder {
    fn node(&mut self, id: String, atom: Atom, origin: &str) -> usize {
        self.nodes.push(Node { id, atom, origin: origin.into() });
        self.nodes.len() - 1
    }

    fn internal(&mut self, label: String, from: (usize, usize), to: (usize, usize)) {
        self.edges.push(Edge { label, from, to, matrix: mat2::IDENTITY, external: false });
    }

    /// Planar base with fibers and `b` boundaries; returns the node ports of boundaries `0..b`.
    /// Boundary `b−1` carries the product of all fibers and the other boundaries.
    fn planar(&mut self, id: &str, fibers: Vec<SeifertCoefficient>, b: usize) -> Vec<(usize, usize)> {
        let fibers = if fibers.is_empty() { vec![SeifertCoefficient { p: 1, q: 0 }] } else { fibers };
        if b == 1 {
            let n = self.node(id.into(), Atom::Disk(fibers), id);
            return vec![(n, 0)];
        }
        let disk = self.node(format!("{id}/disk"), Atom::Disk(fibers), id);
        let mut ports = Vec::with_capacity(b);
        let mut prev = (disk, 0);
        for k in 0..b - 1 {
            let c = self.node(format!("{id}/c3_{}", k + 1), Atom::C3, id);
            self.internal(format!("{id}/i{}", k + 1), prev, (c, 0));
            ports.push((c, 1));
            prev = (c, 2);
        }
        ports.push(prev);
        ports
    }
}

fn check_coprime(id: &str, c: &[i64; 2], allow_nonpositive: bool) -> Result<()> {
    let [p, q] = *c;
    if p.gcd(&q) != 1 {
        return Err(Error::NonCoprime(p, q));
    }
    if !allow_nonpositive && p < 1 {
        return Err(Error::InvalidPiece(id.into(), format!("fiber order {p} must be positive")));
    }
    Ok(())
}

fn fibers(spec: &PieceSpec) -> Result<Vec<SeifertCoefficient>> {
    spec.coefficients
        .iter()
        .map(|c| {
            check_coprime(&spec.id, c, false)?;
            Ok(SeifertCoefficient { p: c[0], q: c[1] })
        })
        .collect()
}

/// Validates a document and expands planar Seifert pieces into `C₃`/`C₂` chains.
pub fn parse_manifold(doc: &ManifoldDocument) -> Result<ManifoldGraph> {
    let mut ids = BTreeMap::new();
    for (i, p) in doc.pieces.iter().enumerate() {
        if ids.insert(p.id.clone(), i).is_some() {
            return Err(Error::DuplicateId(p.id.clone()));
        }
        if matches!(p.kind, PieceKind::SeifertPlanar | PieceKind::SeifertMobiusPlanar) && p.port_count() == 0 {
            return Err(Error::InvalidPiece(p.id.clone(), "needs at least one boundary".into()));
        }
    }
    let mut used = BTreeSet::new();
    for g in &doc.gluings {
        for (id, port) in [&g.from, &g.to] {
            let Some(&i) = ids.get(id) else { return Err(Error::UnknownPiece(id.clone())) };
            if *port >= doc.pieces[i].port_count() {
                return Err(Error::PortOutOfRange(id.clone(), *port));
            }
            if !used.insert((id.clone(), *port)) {
                return Err(Error::PortReused(id.clone(), *port));
            }
        }
        mat2::check_unimodular(g.matrix)?;
    }
    check_tree(doc, &ids)?;
    let total_ports: usize = doc.pieces.iter().map(|p| p.port_count()).sum();
    let open = total_ports - used.len();
    if open > 1 {
        return Err(Error::OpenPorts(open));
    }

    let mut b = Builder { nodes: Vec::new(), edges: Vec::new() };
    let mut port_map = BTreeMap::new();
    for spec in &doc.pieces {
        let id = spec.id.as_str();
        let ports: Vec<(usize, usize)> = match spec.kind {
            PieceKind::SolidTorus => {
                let c = match spec.coefficients.as_slice() {
                    [] => [1, 0],
                    [c] => *c,
                    _ => return Err(Error::InvalidPiece(id.into(), "a solid torus takes one meridian".into())),
                };
                check_coprime(id, &c, true)?;
                let n = b.node(id.into(), Atom::SolidTorus(Slope::new(c[0], c[1])?), id);
                vec![(n, 0)]
            }
            PieceKind::SeifertDisk => {
                let fs = fibers(spec)?;
                if fs.is_empty() {
                    return Err(Error::InvalidPiece(id.into(), "needs at least one fiber".into()));
                }
                let n = b.node(id.into(), Atom::Disk(fs), id);
                vec![(n, 0)]
            }
            PieceKind::SeifertPlanar => b.planar(id, fibers(spec)?, spec.port_count()),
            PieceKind::SeifertMobiusPlanar => {
                let fs = fibers(spec)?;
                let nb = spec.port_count();
                if nb == 1 && fs.is_empty() {
                    let n = b.node(id.into(), Atom::MobiusTwisted, id);
                    vec![(n, 0)]
                } else {
                    let c2 = b.node(format!("{id}/c2"), Atom::C2, id);
                    let mut ports = b.planar(&format!("{id}/base"), fs, nb);
                    let inner = ports.pop().expect("planar part has a product port");
                    b.internal(format!("{id}/i0"), inner, (c2, 0));
                    ports.push((c2, 1));
                    ports
                }
            }
            PieceKind::C3 | PieceKind::C2 => {
                if !spec.coefficients.is_empty() {
                    return Err(Error::InvalidPiece(id.into(), "takes no coefficients".into()));
                }
                let atom = if spec.kind == PieceKind::C3 { Atom::C3 } else { Atom::C2 };
                let k = atom.port_count();
                let n = b.node(id.into(), atom, id);
                (0..k).map(|p| (n, p)).collect()
            }
        };
        for (k, np) in ports.into_iter().enumerate() {
            port_map.insert((id.to_string(), k), np);
        }
    }
    for (k, g) in doc.gluings.iter().enumerate() {
        let from = port_map[&(g.from.0.clone(), g.from.1)];
        let to = port_map[&(g.to.0.clone(), g.to.1)];
        b.edges.push(Edge { label: doc.edge_label(k), from, to, matrix: g.matrix, external: true });
    }
    let mut open_port = None;
    for (i, n) in b.nodes.iter().enumerate() {
        for p in 0..n.atom.port_count() {
            if !b.edges.iter().any(|e| e.from == (i, p) || e.to == (i, p)) {
                open_port = Some((i, p));
            }
        }
    }
    Ok(ManifoldGraph { nodes: b.nodes, edges: b.edges, open_port, port_map })
}

fn check_tree(doc: &ManifoldDocument, ids: &BTreeMap<String, usize>) -> Result<()> {
    let n = doc.pieces.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (k, g) in doc.gluings.iter().enumerate() {
        let (a, b) = (ids[&g.from.0], ids[&g.to.0]);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return Err(Error::NotTree(format!("gluing {} closes a cycle", doc.edge_label(k))));
        }
        parent[ra] = rb;
    }
    let roots: BTreeSet<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
    if roots.len() > 1 {
        return Err(Error::NotTree(format!("{} connected components", roots.len())));
    }
    Ok(())
}

impl ManifoldGraph {
    pub fn from_document(doc: &ManifoldDocument) -> Result<ManifoldGraph> {
        parse_manifold(doc)
    }

    pub fn is_closed(&self) -> bool {
        self.open_port.is_none()
    }

    pub fn edge_index(&self, label: &str) -> Result<usize> {
        self.edges.iter().position(|e| e.label == label).ok_or_else(|| Error::UnknownEdge(label.into()))
    }

    /// Every edge of the tree separates it into two sides.
    pub fn interior_edges(&self) -> Vec<usize> {
        (0..self.edges.len()).collect()
    }

    fn edge_at(&self, port: (usize, usize)) -> Option<usize> {
        self.edges.iter().position(|e| e.from == port || e.to == port)
    }

    /// The triple seen across the edge at `port`, in the basis of `port`.
    fn incoming(&self, port: (usize, usize)) -> Result<BoundaryTriple> {
        let Some(ei) = self.edge_at(port) else {
            let n = &self.nodes[port.0];
            return Err(Error::InvalidPiece(n.id.clone(), format!("port {} is not glued", port.1)));
        };
        let e = &self.edges[ei];
        let (far, m) = if e.from == port { (e.to, mat2::inverse(e.matrix)?) } else { (e.from, e.matrix) };
        let t = self.triple_at(far.0, far.1)?;
        t.change_basis(m, (format!("x{}", port.1), "h".into()))
    }

    /// The triple of the component containing `node` once the edge at `port` is cut, seen at that port.
    pub fn triple_at(&self, node: usize, port: usize) -> Result<BoundaryTriple> {
        let n = &self.nodes[node];
        if port >= n.atom.port_count() {
            return Err(Error::PortOutOfRange(n.id.clone(), port));
        }
        let neg = [[-1, 0], [0, 1]];
        let flip = |t: BoundaryTriple| t.change_basis(neg, (t.basis_label.0.clone() + "^-1", "h".into()));
        match &n.atom {
            Atom::SolidTorus(s) => Ok(solid_torus_triple(*s)),
            Atom::Disk(cs) => seifert_disk_triple(cs),
            Atom::MobiusTwisted => seifert_mobius_triple(&[]),
            Atom::C3 => {
                let others: Vec<usize> = (0..3).filter(|&k| k != port).collect();
                let (ta, tb) =
                    rayon::join(|| self.incoming((node, others[0])), || self.incoming((node, others[1])));
                let (ta, tb) = (ta?, tb?);
                let mut t = match port {
                    2 => c3_compose(&ta, &tb)?,
                    // x₀ = x₂·x₁⁻¹
                    0 => c3_compose(&tb, &flip(ta)?)?,
                    // x₁ = x₀⁻¹·x₂
                    _ => c3_compose(&flip(ta)?, &tb)?,
                };
                t.basis_label = (format!("x{port}"), "h".into());
                Ok(t)
            }
            Atom::C2 => {
                let other = 1 - port;
                let t1 = self.incoming((node, other))?;
                let mut t = c2_compose(&t1)?;
                t.basis_label = (format!("x{port}"), "h".into());
                Ok(t)
            }
        }
    }

    /// Folds both sides of an edge; the second triple is transported into the `from` basis.
    pub fn reduce_to_split(&self, edge: usize) -> Result<(BoundaryTriple, BoundaryTriple, Mat2)> {
        let e = self.edges.get(edge).ok_or_else(|| Error::UnknownEdge(format!("#{edge}")))?;
        let (t1, t2) = rayon::join(|| self.triple_at(e.from.0, e.from.1), || self.triple_at(e.to.0, e.to.1));
        Ok((t1?, t2?, e.matrix))
    }

    /// The triple of a manifold with one unglued port, at that port.
    pub fn boundary_triple(&self) -> Result<BoundaryTriple> {
        let Some((n, p)) = self.open_port else { return Err(Error::OpenPorts(0)) };
        self.triple_at(n, p)
    }

    /// The expanded tree as a document of atomic pieces.
    pub fn to_document(&self) -> ManifoldDocument {
        let pieces = self.nodes.iter().map(|n| n.atom.to_spec(&n.id)).collect();
        // Document gluings first, so the default split survives a round trip.
        let ordered = self.edges.iter().filter(|e| e.external).chain(self.edges.iter().filter(|e| !e.external));
        let gluings = ordered
            .map(|e| GluingSpec {
                from: (self.nodes[e.from.0].id.clone(), e.from.1),
                to: (self.nodes[e.to.0].id.clone(), e.to.1),
                matrix: e.matrix,
                label: Some(e.label.clone()),
            })
            .collect();
        ManifoldDocument { name: None, pieces, gluings }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(text: &str) -> ManifoldDocument {
        ManifoldDocument::from_json(text).unwrap()
    }

    #[test]
    fn two_disks_form_a_tree() {
        let d = ManifoldDocument::two_piece(
            PieceSpec::disk("a", &[(2, 1), (3, 1)]),
            PieceSpec::disk("b", &[(2, 1), (3, 1)]),
            [[1, -1], [-4, 5]],
        );
        let g = parse_manifold(&d).unwrap();
        assert_eq!(g.nodes.len(), 2);
        assert_eq!(g.edges.len(), 1);
        assert!(g.is_closed());
    }

    #[test]
    fn singular_matrix_rejected() {
        let d = ManifoldDocument::two_piece(PieceSpec::disk("a", &[(2, 1)]), PieceSpec::disk("b", &[(3, 1)]), [[1, 1], [1, 1]]);
        assert!(matches!(parse_manifold(&d), Err(Error::NotUnimodular(_, 0))));
    }

    #[test]
    fn planar_expansion_counts() {
        let d = doc(r#"{"pieces":[{"id":"P","type":"seifert_planar","coefficients":[[2,1]],"ports":3},
            {"id":"a","type":"solid_torus","coefficients":[[1,0]]},{"id":"b","type":"solid_torus","coefficients":[[1,0]]}],
            "gluings":[{"from":["P",0],"to":["a",0],"matrix":[[1,0],[0,1]]},{"from":["P",1],"to":["b",0],"matrix":[[1,0],[0,1]]}]}"#);
        let g = parse_manifold(&d).unwrap();
        let c3 = g.nodes.iter().filter(|n| n.atom == Atom::C3).count();
        let disks = g.nodes.iter().filter(|n| matches!(n.atom, Atom::Disk(_))).count();
        assert_eq!((c3, disks), (2, 1));
        assert_eq!(g.open_port, Some(g.port_map[&("P".to_string(), 2)]));
    }

    #[test]
    fn diagnostics_are_distinct() {
        let cyc = doc(r#"{"pieces":[{"id":"c","type":"C3"}],
            "gluings":[{"from":["c",0],"to":["c",1],"matrix":[[1,0],[0,1]]}]}"#);
        assert!(matches!(parse_manifold(&cyc), Err(Error::NotTree(_))));
        let reuse = doc(r#"{"pieces":[{"id":"a","type":"solid_torus"},{"id":"b","type":"solid_torus"},{"id":"c","type":"solid_torus"}],
            "gluings":[{"from":["a",0],"to":["b",0],"matrix":[[0,1],[1,0]]},{"from":["a",0],"to":["c",0],"matrix":[[0,1],[1,0]]}]}"#);
        assert!(matches!(parse_manifold(&reuse), Err(Error::PortReused(_, 0))));
        let nc = doc(r#"{"pieces":[{"id":"a","type":"seifert_disk","coefficients":[[4,2]]}]}"#);
        assert!(matches!(parse_manifold(&nc), Err(Error::NonCoprime(4, 2))));
        let dup = doc(r#"{"pieces":[{"id":"a","type":"C3"},{"id":"a","type":"C3"}]}"#);
        assert!(matches!(parse_manifold(&dup), Err(Error::DuplicateId(_))));
    }

    #[test]
    fn decompose_round_trip() {
        let d = doc(r#"{"pieces":[{"id":"P","type":"seifert_mobius_planar","coefficients":[[3,1]],"ports":2},
            {"id":"a","type":"seifert_disk","coefficients":[[2,1],[3,1]]}],
            "gluings":[{"from":["P",0],"to":["a",0],"matrix":[[0,1],[1,0]]}]}"#);
        let g = parse_manifold(&d).unwrap();
        let again = parse_manifold(&g.to_document()).unwrap();
        let shape = |g: &ManifoldGraph| g.nodes.iter().map(|n| (n.id.clone(), n.atom.clone())).collect::<Vec<_>>();
        assert_eq!(shape(&again), shape(&g));
        let sorted = |g: &ManifoldGraph| {
            let mut v: Vec<_> = g.edges.iter().map(|e| (e.label.clone(), e.matrix)).collect();
            v.sort();
            v
        };
        assert_eq!(sorted(&again), sorted(&g));
        assert_eq!(again.edges[0].label, "e1");
        let (v1, v2) = (g.analyze(None), again.analyze(None));
        assert_eq!(v1.is_ok(), v2.is_ok());
    }
}
