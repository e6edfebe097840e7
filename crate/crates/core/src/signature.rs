//! Signatures: object variables plus typed morphism variables.
//!
//! Object terms are kept fully syntactic (no implicit strictification); unit
//! and associativity erasure happens in the compiler, where the graphical
//! language makes them invisible. [`expand_boundary`] turns an object term
//! into the ordered list of wires it denotes, bottom-to-top: list index 0 is
//! the bottom wire.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// A syntactic object term over a signature's object variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObjectTerm {
    Var(String),
    Unit,
    Tensor(Box<ObjectTerm>, Box<ObjectTerm>),
    RightDual(Box<ObjectTerm>),
    LeftDual(Box<ObjectTerm>),
}

impl ObjectTerm {
    pub fn var(name: impl Into<String>) -> Self {
        ObjectTerm::Var(name.into())
    }

    pub fn tensor(a: ObjectTerm, b: ObjectTerm) -> Self {
        ObjectTerm::Tensor(Box::new(a), Box::new(b))
    }

    pub fn right_dual(a: ObjectTerm) -> Self {
        ObjectTerm::RightDual(Box::new(a))
    }

    pub fn left_dual(a: ObjectTerm) -> Self {
        ObjectTerm::LeftDual(Box::new(a))
    }

    /// Tensor a list together, left-associated; the empty list is `I`.
    pub fn tensor_all(parts: impl IntoIterator<Item = ObjectTerm>) -> Self {
        let mut it = parts.into_iter();
        match it.next() {
            None => ObjectTerm::Unit,
            Some(first) => it.fold(first, ObjectTerm::tensor),
        }
    }

    pub fn contains_dual(&self) -> bool {
        match self {
            ObjectTerm::Var(_) | ObjectTerm::Unit => false,
            ObjectTerm::Tensor(a, b) => a.contains_dual() || b.contains_dual(),
            ObjectTerm::RightDual(_) | ObjectTerm::LeftDual(_) => true,
        }
    }

    pub fn is_atomic_var(&self) -> bool {
        matches!(self, ObjectTerm::Var(_))
    }

    /// All object-variable names occurring in the term.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            ObjectTerm::Var(v) => {
                out.insert(v.clone());
            }
            ObjectTerm::Unit => {}
            ObjectTerm::Tensor(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            ObjectTerm::RightDual(a) | ObjectTerm::LeftDual(a) => a.collect_vars(out),
        }
    }
}

impl fmt::Display for ObjectTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Precedence: duals bind tighter than `*`; `*` is left-associative.
        fn go(t: &ObjectTerm, f: &mut fmt::Formatter<'_>, in_tensor_rhs: bool) -> fmt::Result {
            match t {
                ObjectTerm::Var(v) => write!(f, "{v}"),
                ObjectTerm::Unit => write!(f, "I"),
                ObjectTerm::Tensor(a, b) => {
                    if in_tensor_rhs {
                        write!(f, "(")?;
                    }
                    go(a, f, false)?;
                    write!(f, " * ")?;
                    go(b, f, true)?;
                    if in_tensor_rhs {
                        write!(f, ")")?;
                    }
                    Ok(())
                }
                ObjectTerm::RightDual(a) | ObjectTerm::LeftDual(a) => {
                    let needs_parens = matches!(**a, ObjectTerm::Tensor(_, _));
                    if needs_parens {
                        write!(f, "(")?;
                    }
                    go(a, f, false)?;
                    if needs_parens {
                        write!(f, ")")?;
                    }
                    write!(f, "{}", if matches!(t, ObjectTerm::RightDual(_)) { "^r" } else { "^l" })
                }
            }
        }
        go(self, f, false)
    }
}

impl fmt::Debug for ObjectTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One boundary wire: an object variable name plus a winding parity.
///
/// Even parity means the wire runs left-to-right, odd means right-to-left.
/// The parity is an arbitrary integer in autonomous regimes, reduced mod 2 in
/// pivotal regimes, and always 0 in progressive regimes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WireLabel {
    pub object: String,
    pub parity: i64,
}

impl WireLabel {
    pub fn new(object: impl Into<String>, parity: i64) -> Self {
        WireLabel { object: object.into(), parity }
    }

    pub fn progressive(object: impl Into<String>) -> Self {
        WireLabel::new(object, 0)
    }

    /// Is the wire directed left-to-right?
    pub fn is_forward(&self) -> bool {
        self.parity.rem_euclid(2) == 0
    }

    pub fn shifted(&self, delta: i64) -> Self {
        WireLabel { object: self.object.clone(), parity: self.parity + delta }
    }
}

impl fmt::Display for WireLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.object, self.parity)
    }
}

impl fmt::Debug for WireLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum SignatureKind {
    Simple,
    Monoidal,
    Autonomous,
}

impl fmt::Display for SignatureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignatureKind::Simple => write!(f, "simple"),
            SignatureKind::Monoidal => write!(f, "monoidal"),
            SignatureKind::Autonomous => write!(f, "autonomous"),
        }
    }
}

/// A signature: declared object variables plus morphism variables with
/// object-term domains and codomains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub kind: SignatureKind,
    pub objects: BTreeSet<String>,
    pub morphisms: BTreeMap<String, (ObjectTerm, ObjectTerm)>,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SigError {
    #[error("object variable `{0}` is not declared")]
    UndeclaredObject(String),
    #[error("morphism `{0}` uses a dual in a monoidal signature")]
    DualInMonoidalSignature(String),
    #[error("morphism `{0}` has a non-atomic type in a simple signature")]
    NonAtomicSimpleType(String),
}

impl Signature {
    pub fn new(kind: SignatureKind) -> Self {
        Signature { kind, objects: BTreeSet::new(), morphisms: BTreeMap::new() }
    }

    pub fn with_objects(kind: SignatureKind, objects: &[&str]) -> Self {
        let mut sig = Signature::new(kind);
        for o in objects {
            sig.objects.insert((*o).to_string());
        }
        sig
    }

    pub fn add_object(&mut self, name: impl Into<String>) -> &mut Self {
        self.objects.insert(name.into());
        self
    }

    pub fn add_morphism(
        &mut self,
        name: impl Into<String>,
        dom: ObjectTerm,
        cod: ObjectTerm,
    ) -> &mut Self {
        self.morphisms.insert(name.into(), (dom, cod));
        self
    }

    pub fn morphism(&self, name: &str) -> Option<&(ObjectTerm, ObjectTerm)> {
        self.morphisms.get(name)
    }
}

/// Check every signature invariant; returns normally iff they all hold.
pub fn validate_signature(sig: &Signature) -> Result<(), SigError> {
    for (name, (dom, cod)) in &sig.morphisms {
        for v in dom.vars().union(&cod.vars()) {
            if !sig.objects.contains(v) {
                return Err(SigError::UndeclaredObject(v.clone()));
            }
        }
        match sig.kind {
            SignatureKind::Simple => {
                if !dom.is_atomic_var() || !cod.is_atomic_var() {
                    return Err(SigError::NonAtomicSimpleType(name.clone()));
                }
            }
            SignatureKind::Monoidal => {
                if dom.contains_dual() || cod.contains_dual() {
                    return Err(SigError::DualInMonoidalSignature(name.clone()));
                }
            }
            SignatureKind::Autonomous => {}
        }
    }
    Ok(())
}

/// Expand an object term into its ordered wire list, bottom-to-top.
///
/// `I` expands to no wires; tensor concatenates; a dual reverses the list and
/// shifts every parity by one (+1 for right duals, -1 for left duals).
pub fn expand_boundary(t: &ObjectTerm) -> Vec<WireLabel> {
    match t {
        ObjectTerm::Var(v) => vec![WireLabel::progressive(v.clone())],
        ObjectTerm::Unit => vec![],
        ObjectTerm::Tensor(a, b) => {
            let mut out = expand_boundary(a);
            out.extend(expand_boundary(b));
            out
        }
        ObjectTerm::RightDual(a) => {
            let mut out = expand_boundary(a);
            out.reverse();
            for w in &mut out {
                w.parity += 1;
            }
            out
        }
        ObjectTerm::LeftDual(a) => {
            let mut out = expand_boundary(a);
            out.reverse();
            for w in &mut out {
                w.parity -= 1;
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> ObjectTerm {
        ObjectTerm::var(s)
    }

    #[test]
    fn validate_accepts_simple_signature() {
        let mut sig = Signature::with_objects(SignatureKind::Simple, &["A", "B"]);
        sig.add_morphism("f", v("A"), v("B"));
        assert_eq!(validate_signature(&sig), Ok(()));
    }

    #[test]
    fn validate_rejects_non_atomic_simple_type() {
        let mut sig = Signature::with_objects(SignatureKind::Simple, &["A"]);
        sig.add_morphism("f", v("A"), ObjectTerm::tensor(v("A"), v("A")));
        assert_eq!(
            validate_signature(&sig),
            Err(SigError::NonAtomicSimpleType("f".into()))
        );
    }

    #[test]
    fn validate_rejects_dual_in_monoidal_signature() {
        let mut sig = Signature::with_objects(SignatureKind::Monoidal, &["A", "B"]);
        sig.add_morphism(
            "g",
            ObjectTerm::Unit,
            ObjectTerm::tensor(v("A"), ObjectTerm::right_dual(v("B"))),
        );
        assert_eq!(
            validate_signature(&sig),
            Err(SigError::DualInMonoidalSignature("g".into()))
        );
    }

    #[test]
    fn validate_rejects_undeclared_object() {
        let mut sig = Signature::with_objects(SignatureKind::Monoidal, &["A"]);
        sig.add_morphism("f", v("A"), v("C"));
        assert_eq!(validate_signature(&sig), Err(SigError::UndeclaredObject("C".into())));
    }

    #[test]
    fn unit_expands_to_no_wires() {
        assert_eq!(expand_boundary(&ObjectTerm::Unit), vec![]);
    }

    #[test]
    fn unit_erasure_and_flattening() {
        // (A * B) * I -> [A:0, B:0]
        let t = ObjectTerm::tensor(ObjectTerm::tensor(v("A"), v("B")), ObjectTerm::Unit);
        assert_eq!(
            expand_boundary(&t),
            vec![WireLabel::new("A", 0), WireLabel::new("B", 0)]
        );
    }

    #[test]
    fn right_dual_reverses_and_increments() {
        // (A * B)^r -> [B:1, A:1]
        let t = ObjectTerm::right_dual(ObjectTerm::tensor(v("A"), v("B")));
        assert_eq!(
            expand_boundary(&t),
            vec![WireLabel::new("B", 1), WireLabel::new("A", 1)]
        );
    }

    #[test]
    fn double_dual_parities_cancel() {
        let t = v("A");
        let rl = ObjectTerm::right_dual(ObjectTerm::left_dual(t.clone()));
        assert_eq!(expand_boundary(&rl), expand_boundary(&t));
        let lr = ObjectTerm::left_dual(ObjectTerm::right_dual(t.clone()));
        assert_eq!(expand_boundary(&lr), expand_boundary(&t));
    }

    #[test]
    fn expand_is_a_monoid_morphism() {
        let s = ObjectTerm::tensor(v("A"), ObjectTerm::right_dual(v("B")));
        let t = ObjectTerm::tensor(ObjectTerm::Unit, v("C"));
        let st = ObjectTerm::tensor(s.clone(), t.clone());
        let mut cat = expand_boundary(&s);
        cat.extend(expand_boundary(&t));
        assert_eq!(expand_boundary(&st), cat);
    }

    #[test]
    fn display_round_trips_structure() {
        let t = ObjectTerm::tensor(
            ObjectTerm::right_dual(ObjectTerm::tensor(v("A"), v("B"))),
            ObjectTerm::left_dual(v("C")),
        );
        assert_eq!(t.to_string(), "(A * B)^r * C^l");
    }
}
