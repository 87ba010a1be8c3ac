//! Manifold documents, gluing graphs, and verdicts.

pub mod corpus;
pub mod document;
pub mod graph;
pub mod verdict;

pub use corpus::{two_disk_corpus, CorpusBounds, CorpusEntry};
pub use document::{GluingSpec, ManifoldDocument, PieceKind, PieceSpec};
pub use graph::{parse_manifold, Atom, Edge, ManifoldGraph, Node};
pub use verdict::{closed_verdict, dehn_fill_verdict, glued_presentation, SplitAnalysis, Status, Verdict, Witness, WitnessKind};
