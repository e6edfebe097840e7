//! Doctrines: the flavors of monoidal category the workbench knows, each
//! with capability flags (which structural constants its term language
//! licenses) and an equivalence regime (which geometric notion its diagrams
//! are compared under).

use std::fmt;

use thiserror::Error;

/// How diagram equivalence is decided for a doctrine.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Regime {
    /// Anchored planar isotopy: combinatorial-map equality after
    /// canonicalization (zigzag cancellation, box-rotation normalization).
    PlanarIso,
    /// Isomorphism of diagrams: anchored port-graph isomorphism.
    Iso,
    /// Regular isotopy: R2/R3 and slide moves, no R1; curvature and writhe
    /// are invariants. Sound semi-decision.
    Regular2D,
    /// Ambient isotopy in 3 dimensions for progressive braided diagrams.
    Isotopy3D,
    /// Framed isotopy in 3 dimensions: braids plus integer framings.
    Framed3D,
    /// Rewriting modulo the copy/erase laws.
    RewriteCartesian,
    /// Rewriting modulo the merge/initial laws.
    RewriteCoCartesian,
    /// Rewriting modulo both families and their interactions.
    RewriteBiproduct,
    /// The spherical doctrines: no geometric decision procedure exists.
    NoDecider,
}

impl Regime {
    pub fn is_rewrite(&self) -> bool {
        matches!(
            self,
            Regime::RewriteCartesian | Regime::RewriteCoCartesian | Regime::RewriteBiproduct
        )
    }

    pub fn is_move_search(&self) -> bool {
        matches!(self, Regime::Regular2D | Regime::Isotopy3D | Regime::Framed3D)
    }
}

/// What the doctrine's term language licenses.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct DoctrineFlags {
    /// Tensor, unit, and the structural isos exist at all (false only for
    /// the bare category doctrine).
    pub monoidal: bool,
    pub braided: bool,
    pub symmetric: bool,
    pub twist: bool,
    pub right_duals: bool,
    pub left_duals: bool,
    pub pivotal: bool,
    pub right_trace: bool,
    pub left_trace: bool,
    pub copy_erase: bool,
    pub merge_initial: bool,
    pub dagger: bool,
    pub spacial: bool,
    pub spherical: bool,
}

macro_rules! doctrine_names {
    ($( $variant:ident => $text:literal ),+ $(,)?) => {
        /// The base (dagger-free) doctrine names.
        #[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
        pub enum DoctrineName {
            $( $variant ),+
        }

        impl DoctrineName {
            pub const ALL: &'static [DoctrineName] = &[ $( DoctrineName::$variant ),+ ];

            pub fn as_str(&self) -> &'static str {
                match self {
                    $( DoctrineName::$variant => $text ),+
                }
            }

            pub fn from_str_opt(s: &str) -> Option<DoctrineName> {
                match s {
                    $( $text => Some(DoctrineName::$variant), )+
                    _ => None,
                }
            }
        }
    };
}

doctrine_names! {
    Category => "category",
    PlanarMonoidal => "planar-monoidal",
    SpacialMonoidal => "spacial-monoidal",
    BraidedMonoidal => "braided-monoidal",
    BalancedMonoidal => "balanced-monoidal",
    SymmetricMonoidal => "symmetric-monoidal",
    PlanarAutonomous => "planar-autonomous",
    PlanarPivotal => "planar-pivotal",
    SphericalPivotal => "spherical-pivotal",
    SpacialPivotal => "spacial-pivotal",
    BraidedAutonomous => "braided-autonomous",
    BraidedPivotal => "braided-pivotal",
    Tortile => "tortile",
    CompactClosed => "compact-closed",
    RightTraced => "right-traced",
    PlanarTraced => "planar-traced",
    SphericalTraced => "spherical-traced",
    SpacialTraced => "spacial-traced",
    BraidedTraced => "braided-traced",
    BalancedTraced => "balanced-traced",
    SymmetricTraced => "symmetric-traced",
    Product => "product",
    Coproduct => "coproduct",
    Biproduct => "biproduct",
    TracedProduct => "traced-product",
    TracedCoproduct => "traced-coproduct",
    TracedBiproduct => "traced-biproduct",
}

impl fmt::Display for DoctrineName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum DoctrineError {
    #[error("unknown doctrine `{0}`")]
    Unknown(String),
    #[error("doctrine `{0}` has no dagger variant")]
    NoDaggerVariant(DoctrineName),
}

/// A doctrine: a base name plus an optional dagger structure.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Doctrine {
    pub name: DoctrineName,
    pub dagger: bool,
}

impl Doctrine {
    pub fn new(name: DoctrineName) -> Self {
        Doctrine { name, dagger: false }
    }

    /// The dagger variant; the planar- and braided-autonomous doctrines
    /// have none, because a dagger on an autonomous category already forces
    /// a pivotal structure.
    pub fn with_dagger(name: DoctrineName) -> Result<Self, DoctrineError> {
        if Self::dagger_eligible(name) {
            Ok(Doctrine { name, dagger: true })
        } else {
            Err(DoctrineError::NoDaggerVariant(name))
        }
    }

    pub fn dagger_eligible(name: DoctrineName) -> bool {
        !matches!(
            name,
            DoctrineName::PlanarAutonomous | DoctrineName::BraidedAutonomous
        )
    }

    pub fn parse(s: &str) -> Result<Self, DoctrineError> {
        if let Some(rest) = s.strip_prefix("dagger-") {
            let name = DoctrineName::from_str_opt(rest)
                .ok_or_else(|| DoctrineError::Unknown(s.to_string()))?;
            Doctrine::with_dagger(name)
        } else {
            let name = DoctrineName::from_str_opt(s)
                .ok_or_else(|| DoctrineError::Unknown(s.to_string()))?;
            Ok(Doctrine::new(name))
        }
    }

    /// Every doctrine, dagger variants included.
    pub fn all() -> Vec<Doctrine> {
        let mut out = Vec::new();
        for &name in DoctrineName::ALL {
            out.push(Doctrine::new(name));
            if Self::dagger_eligible(name) {
                out.push(Doctrine { name, dagger: true });
            }
        }
        out
    }

    pub fn flags(&self) -> DoctrineFlags {
        use DoctrineName::*;
        let mut f = DoctrineFlags { monoidal: true, dagger: self.dagger, ..Default::default() };
        match self.name {
            Category => {
                f.monoidal = false;
            }
            PlanarMonoidal => {}
            SpacialMonoidal => {
                f.spacial = true;
            }
            BraidedMonoidal => {
                f.braided = true;
                f.spacial = true;
            }
            BalancedMonoidal => {
                f.braided = true;
                f.twist = true;
                f.spacial = true;
            }
            SymmetricMonoidal => {
                f.braided = true;
                f.symmetric = true;
                f.spacial = true;
            }
            PlanarAutonomous => {
                f.right_duals = true;
                f.left_duals = true;
            }
            PlanarPivotal => {
                f.right_duals = true;
                f.left_duals = true;
                f.pivotal = true;
            }
            SphericalPivotal => {
                f.right_duals = true;
                f.left_duals = true;
                f.pivotal = true;
                f.spherical = true;
            }
            SpacialPivotal => {
                f.right_duals = true;
                f.left_duals = true;
                f.pivotal = true;
                f.spacial = true;
                f.spherical = true;
            }
            BraidedAutonomous => {
                f.braided = true;
                f.spacial = true;
                f.right_duals = true;
                f.left_duals = true;
            }
            BraidedPivotal => {
                f.braided = true;
                f.spacial = true;
                f.right_duals = true;
                f.left_duals = true;
                f.pivotal = true;
                // A braided pivotal category is balanced, so the twist is in
                // the language; it compiles to its curl expansion.
                f.twist = true;
            }
            Tortile => {
                f.braided = true;
                f.twist = true;
                f.spacial = true;
                f.spherical = true;
                f.right_duals = true;
                f.left_duals = true;
                f.pivotal = true;
            }
            CompactClosed => {
                f.braided = true;
                f.symmetric = true;
                f.spacial = true;
                f.spherical = true;
                f.right_duals = true;
                f.left_duals = true;
                f.pivotal = true;
            }
            RightTraced => {
                f.right_trace = true;
            }
            PlanarTraced => {
                f.right_trace = true;
                f.left_trace = true;
            }
            SphericalTraced => {
                f.right_trace = true;
                f.left_trace = true;
                f.spherical = true;
            }
            SpacialTraced => {
                f.right_trace = true;
                f.left_trace = true;
                f.spacial = true;
                f.spherical = true;
            }
            BraidedTraced => {
                f.braided = true;
                f.spacial = true;
                f.right_trace = true;
                f.left_trace = true;
            }
            BalancedTraced => {
                f.braided = true;
                f.twist = true;
                f.spacial = true;
                f.spherical = true;
                f.right_trace = true;
                f.left_trace = true;
            }
            SymmetricTraced => {
                f.braided = true;
                f.symmetric = true;
                f.spacial = true;
                f.spherical = true;
                f.right_trace = true;
                f.left_trace = true;
            }
            Product => {
                f.braided = true;
                f.symmetric = true;
                f.spacial = true;
                f.copy_erase = true;
            }
            Coproduct => {
                f.braided = true;
                f.symmetric = true;
                f.spacial = true;
                f.merge_initial = true;
            }
            Biproduct => {
                f.braided = true;
                f.symmetric = true;
                f.spacial = true;
                f.copy_erase = true;
                f.merge_initial = true;
            }
            TracedProduct => {
                f.braided = true;
                f.symmetric = true;
                f.spacial = true;
                f.spherical = true;
                f.copy_erase = true;
                f.right_trace = true;
                f.left_trace = true;
            }
            TracedCoproduct => {
                f.braided = true;
                f.symmetric = true;
                f.spacial = true;
                f.spherical = true;
                f.merge_initial = true;
                f.right_trace = true;
                f.left_trace = true;
            }
            TracedBiproduct => {
                f.braided = true;
                f.symmetric = true;
                f.spacial = true;
                f.spherical = true;
                f.copy_erase = true;
                f.merge_initial = true;
                f.right_trace = true;
                f.left_trace = true;
            }
        }
        f
    }

    pub fn regime(&self) -> Regime {
        use DoctrineName::*;
        match self.name {
            Category => Regime::Iso,
            PlanarMonoidal => Regime::PlanarIso,
            SpacialMonoidal => Regime::Iso,
            BraidedMonoidal => Regime::Isotopy3D,
            BalancedMonoidal => Regime::Framed3D,
            SymmetricMonoidal => Regime::Iso,
            PlanarAutonomous => Regime::PlanarIso,
            PlanarPivotal => Regime::PlanarIso,
            SphericalPivotal => Regime::NoDecider,
            SpacialPivotal => Regime::Iso,
            BraidedAutonomous => Regime::Regular2D,
            BraidedPivotal => Regime::Regular2D,
            Tortile => Regime::Framed3D,
            CompactClosed => Regime::Iso,
            RightTraced => Regime::PlanarIso,
            PlanarTraced => Regime::PlanarIso,
            SphericalTraced => Regime::NoDecider,
            SpacialTraced => Regime::Iso,
            BraidedTraced => Regime::Regular2D,
            BalancedTraced => Regime::Framed3D,
            SymmetricTraced => Regime::Iso,
            Product => Regime::RewriteCartesian,
            Coproduct => Regime::RewriteCoCartesian,
            Biproduct => Regime::RewriteBiproduct,
            TracedProduct => Regime::RewriteCartesian,
            TracedCoproduct => Regime::RewriteCoCartesian,
            TracedBiproduct => Regime::RewriteBiproduct,
        }
    }

    /// Is this one of the traced doctrines (decision routes through the
    /// traced module)?
    pub fn is_traced(&self) -> bool {
        let f = self.flags();
        f.right_trace || f.left_trace
    }

    /// Coherence for this doctrine is only conjectured; verdicts should be
    /// labeled "per conjecture".
    pub fn coherence_is_conjectural(&self) -> bool {
        use DoctrineName::*;
        matches!(
            self.name,
            SpacialMonoidal | SpacialPivotal | RightTraced | PlanarTraced | SpacialTraced
        )
    }

    /// In pivotal regimes winding parities only matter mod 2.
    pub fn winding_mod2(&self) -> bool {
        self.flags().pivotal
    }
}

impl fmt::Display for Doctrine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dagger {
            write!(f, "dagger-{}", self.name)
        } else {
            write!(f, "{}", self.name)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_are_monotone_within_each_doctrine() {
        for d in Doctrine::all() {
            let f = d.flags();
            if f.symmetric {
                assert!(f.braided, "{d}: symmetric must imply braided");
            }
            if f.braided {
                assert!(f.spacial, "{d}: braided must imply spacial");
            }
            if f.pivotal {
                assert!(f.right_duals && f.left_duals, "{d}: pivotal implies duals");
            }
            if d.name == DoctrineName::Tortile {
                assert!(f.twist && f.pivotal);
            }
            if !f.monoidal {
                assert!(d.name == DoctrineName::Category);
            }
        }
    }

    #[test]
    fn no_decider_exactly_for_spherical_doctrines() {
        for d in Doctrine::all() {
            let spherical_name = matches!(
                d.name,
                DoctrineName::SphericalPivotal | DoctrineName::SphericalTraced
            );
            assert_eq!(d.regime() == Regime::NoDecider, spherical_name, "{d}");
        }
    }

    #[test]
    fn parse_round_trips() {
        for d in Doctrine::all() {
            assert_eq!(Doctrine::parse(&d.to_string()), Ok(d));
        }
        assert!(Doctrine::parse("dagger-planar-autonomous").is_err());
        assert!(Doctrine::parse("dagger-braided-autonomous").is_err());
        assert!(Doctrine::parse("frobenius").is_err());
    }

    #[test]
    fn regular_isotopy_exactly_for_braided_dual_doctrines() {
        assert_eq!(Doctrine::parse("braided-autonomous").unwrap().regime(), Regime::Regular2D);
        assert_eq!(Doctrine::parse("braided-pivotal").unwrap().regime(), Regime::Regular2D);
        assert_eq!(Doctrine::parse("braided-traced").unwrap().regime(), Regime::Regular2D);
        assert_eq!(Doctrine::parse("tortile").unwrap().regime(), Regime::Framed3D);
    }
}
