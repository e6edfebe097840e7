//! A workbench for the term languages and string-diagram languages of
//! monoidal categories.
//!
//! The pipeline: declare a [`Signature`], parse or build [`Term`]s over it,
//! typecheck them ([`term::infer_type`]), pick a [`Doctrine`] (planar,
//! braided, pivotal, traced, dagger, ...), compile terms to port-graph
//! [`Diagram`]s ([`compile::compile`]), and ask whether two terms denote the
//! same morphism in the free category of that doctrine
//! ([`equivalence::decide`]). Concrete models (finite relations, matrices
//! over a semiring) evaluate terms and diagrams independently and act as a
//! soundness oracle ([`models`]).
//!
//! Each doctrine carries an equivalence *regime*: isomorphism of diagrams,
//! anchored planar isotopy, regular isotopy, framed 3d isotopy, or rewriting
//! modulo (co)monoid laws. Exact deciders cover the isomorphism, planar, and
//! rewrite regimes; the braided/balanced regimes get a sound semi-decision
//! built from geometric invariants plus bounded move search.

pub mod axioms;
pub mod compile;
pub mod corpus;
pub mod diagram;
pub mod doctrine;
pub mod equivalence;
pub mod frontend;
pub mod models;
pub mod render;
pub mod rewrite;
pub mod signature;
pub mod term;
pub mod traced;

pub use diagram::{Cell, Diagram, InvariantVector, Slice};
pub use doctrine::{Doctrine, DoctrineFlags, DoctrineName, Regime};
pub use equivalence::{decide, MoveSet, Verdict};
pub use signature::{expand_boundary, ObjectTerm, Signature, SignatureKind, WireLabel};
pub use term::{infer_type, MorphismType, Term};
