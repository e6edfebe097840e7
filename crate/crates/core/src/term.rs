//! Morphism terms, the typechecker, doctrine gating, and the term-level
//! normalizers (dagger pushdown, adjoint-mate expansion).
//!
//! Terms are fully parenthesized and non-strict: unitors and associators are
//! explicit nodes. Strictification happens in the compiler, never here, so
//! that structural-only terms can be observed to compile to identity
//! diagrams.

use std::fmt;

use thiserror::Error;

use crate::doctrine::Doctrine;
use crate::signature::{ObjectTerm, Signature};

/// A typed morphism term over a signature.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Gen(String),
    Id(ObjectTerm),
    /// `Compose(after, before)` is `after . before` (apply `before` first).
    Compose(Box<Term>, Box<Term>),
    /// `Tensor(bottom, top)`, written bottom-to-top as drawn.
    Tensor(Box<Term>, Box<Term>),
    /// Associator `(a*b)*c -> a*(b*c)`; the flag inverts it.
    Alpha(ObjectTerm, ObjectTerm, ObjectTerm, bool),
    /// Left unitor `I*a -> a`; the flag inverts it.
    Lambda(ObjectTerm, bool),
    /// Right unitor `a*I -> a`; the flag inverts it.
    Rho(ObjectTerm, bool),
    /// Braiding `a*b -> b*a`; inverted: `b*a -> a*b`.
    Sym(ObjectTerm, ObjectTerm, bool),
    /// Twist `a -> a`; the flag inverts it.
    Twist(ObjectTerm, bool),
    /// Unit of the right-dual pairing, `I -> a^r * a`.
    Eta(ObjectTerm),
    /// Counit of the right-dual pairing, `a * a^r -> I`.
    Eps(ObjectTerm),
    /// Unit of the left-dual pairing, `I -> a * a^l`.
    EtaL(ObjectTerm),
    /// Counit of the left-dual pairing, `a^l * a -> I`.
    EpsL(ObjectTerm),
    /// Pivotal structure `a -> a^rr`; inverted: `a^rr -> a`.
    Piv(ObjectTerm, bool),
    /// Diagonal `a -> a * a`.
    Copy(ObjectTerm),
    /// Terminal map `a -> I`.
    Erase(ObjectTerm),
    /// Codiagonal `a * a -> a`.
    Merge(ObjectTerm),
    /// Initial map `I -> a`.
    Init(ObjectTerm),
    /// Right trace over `x`: body `A*x -> B*x` yields `A -> B`.
    TrR(ObjectTerm, Box<Term>),
    /// Left trace over `x`: body `x*A -> x*B` yields `A -> B`.
    TrL(ObjectTerm, Box<Term>),
    Dagger(Box<Term>),
    /// Adjoint mate: body `A -> B` yields `B^r -> A^r`.
    Mate(Box<Term>),
}

impl Term {
    pub fn gen(name: impl Into<String>) -> Term {
        Term::Gen(name.into())
    }

    pub fn compose(after: Term, before: Term) -> Term {
        Term::Compose(Box::new(after), Box::new(before))
    }

    /// Diagrammatic-order composition: `seq(f, g)` runs `f` then `g`.
    pub fn seq(first: Term, then: Term) -> Term {
        Term::compose(then, first)
    }

    /// Chain a list in diagrammatic order.
    pub fn seq_all(parts: impl IntoIterator<Item = Term>) -> Term {
        let mut it = parts.into_iter();
        let first = it.next().expect("seq_all needs at least one term");
        it.fold(first, Term::seq)
    }

    pub fn tensor(bottom: Term, top: Term) -> Term {
        Term::Tensor(Box::new(bottom), Box::new(top))
    }

    pub fn tensor_all(parts: impl IntoIterator<Item = Term>) -> Term {
        let mut it = parts.into_iter();
        let first = it.next().expect("tensor_all needs at least one term");
        it.fold(first, Term::tensor)
    }

    pub fn dagger(t: Term) -> Term {
        Term::Dagger(Box::new(t))
    }

    pub fn mate(t: Term) -> Term {
        Term::Mate(Box::new(t))
    }

    pub fn tr_r(x: ObjectTerm, body: Term) -> Term {
        Term::TrR(x, Box::new(body))
    }

    pub fn tr_l(x: ObjectTerm, body: Term) -> Term {
        Term::TrL(x, Box::new(body))
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::frontend::print_term(self))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MorphismType {
    pub dom: ObjectTerm,
    pub cod: ObjectTerm,
}

impl MorphismType {
    pub fn new(dom: ObjectTerm, cod: ObjectTerm) -> Self {
        MorphismType { dom, cod }
    }
}

impl fmt::Display for MorphismType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.dom, self.cod)
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TermError {
    #[error("type mismatch at {path}: expected {expected}, got {got}")]
    TypeMismatch { path: String, expected: String, got: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("constant `{constant}` is not licensed by doctrine `{doctrine}`")]
    ConstantNotInDoctrine { constant: String, doctrine: String },
}

/// Derive the unique type of a term, or fail with the offending path.
pub fn infer_type(t: &Term, sig: &Signature) -> Result<MorphismType, TermError> {
    infer_at(t, sig, "")
}

fn mismatch(path: &str, expected: impl fmt::Display, got: impl fmt::Display) -> TermError {
    TermError::TypeMismatch {
        path: if path.is_empty() { "<root>".into() } else { path.into() },
        expected: expected.to_string(),
        got: got.to_string(),
    }
}

fn infer_at(t: &Term, sig: &Signature, path: &str) -> Result<MorphismType, TermError> {
    use ObjectTerm as O;
    let ty = |d: ObjectTerm, c: ObjectTerm| Ok(MorphismType::new(d, c));
    match t {
        Term::Gen(name) => match sig.morphism(name) {
            Some((d, c)) => ty(d.clone(), c.clone()),
            None => Err(TermError::UnknownGenerator(name.clone())),
        },
        Term::Id(o) => ty(o.clone(), o.clone()),
        Term::Compose(after, before) => {
            let tb = infer_at(before, sig, &format!("{path}.before"))?;
            let ta = infer_at(after, sig, &format!("{path}.after"))?;
            if tb.cod != ta.dom {
                return Err(mismatch(&format!("{path}.compose"), &ta.dom, &tb.cod));
            }
            ty(tb.dom, ta.cod)
        }
        Term::Tensor(bottom, top) => {
            let tb = infer_at(bottom, sig, &format!("{path}.bottom"))?;
            let tt = infer_at(top, sig, &format!("{path}.top"))?;
            ty(O::tensor(tb.dom, tt.dom), O::tensor(tb.cod, tt.cod))
        }
        Term::Alpha(a, b, c, inv) => {
            let lhs = O::tensor(O::tensor(a.clone(), b.clone()), c.clone());
            let rhs = O::tensor(a.clone(), O::tensor(b.clone(), c.clone()));
            if *inv {
                ty(rhs, lhs)
            } else {
                ty(lhs, rhs)
            }
        }
        Term::Lambda(a, inv) => {
            let lhs = O::tensor(O::Unit, a.clone());
            if *inv {
                ty(a.clone(), lhs)
            } else {
                ty(lhs, a.clone())
            }
        }
        Term::Rho(a, inv) => {
            let lhs = O::tensor(a.clone(), O::Unit);
            if *inv {
                ty(a.clone(), lhs)
            } else {
                ty(lhs, a.clone())
            }
        }
        Term::Sym(a, b, inv) => {
            let ab = O::tensor(a.clone(), b.clone());
            let ba = O::tensor(b.clone(), a.clone());
            if *inv {
                ty(ba, ab)
            } else {
                ty(ab, ba)
            }
        }
        Term::Twist(a, _) => ty(a.clone(), a.clone()),
        Term::Eta(a) => ty(O::Unit, O::tensor(O::right_dual(a.clone()), a.clone())),
        Term::Eps(a) => ty(O::tensor(a.clone(), O::right_dual(a.clone())), O::Unit),
        Term::EtaL(a) => ty(O::Unit, O::tensor(a.clone(), O::left_dual(a.clone()))),
        Term::EpsL(a) => ty(O::tensor(O::left_dual(a.clone()), a.clone()), O::Unit),
        Term::Piv(a, inv) => {
            let dd = O::right_dual(O::right_dual(a.clone()));
            if *inv {
                ty(dd, a.clone())
            } else {
                ty(a.clone(), dd)
            }
        }
        Term::Copy(a) => ty(a.clone(), O::tensor(a.clone(), a.clone())),
        Term::Erase(a) => ty(a.clone(), O::Unit),
        Term::Merge(a) => ty(O::tensor(a.clone(), a.clone()), a.clone()),
        Term::Init(a) => ty(O::Unit, a.clone()),
        Term::TrR(x, body) => {
            let tb = infer_at(body, sig, &format!("{path}.trR"))?;
            let split = |o: &ObjectTerm, what: &str| -> Result<ObjectTerm, TermError> {
                match o {
                    O::Tensor(l, r) if **r == *x => Ok((**l).clone()),
                    _ => Err(mismatch(
                        &format!("{path}.trR.{what}"),
                        format!("_ * {x}"),
                        o,
                    )),
                }
            };
            let a = split(&tb.dom, "dom")?;
            let b = split(&tb.cod, "cod")?;
            ty(a, b)
        }
        Term::TrL(x, body) => {
            let tb = infer_at(body, sig, &format!("{path}.trL"))?;
            let split = |o: &ObjectTerm, what: &str| -> Result<ObjectTerm, TermError> {
                match o {
                    O::Tensor(l, r) if **l == *x => Ok((**r).clone()),
                    _ => Err(mismatch(
                        &format!("{path}.trL.{what}"),
                        format!("{x} * _"),
                        o,
                    )),
                }
            };
            let a = split(&tb.dom, "dom")?;
            let b = split(&tb.cod, "cod")?;
            ty(a, b)
        }
        Term::Dagger(body) => {
            let tb = infer_at(body, sig, &format!("{path}.dagger"))?;
            ty(tb.cod, tb.dom)
        }
        Term::Mate(body) => {
            let tb = infer_at(body, sig, &format!("{path}.mate"))?;
            ty(O::right_dual(tb.cod), O::right_dual(tb.dom))
        }
    }
}

/// Check that every constant in the term is licensed by the doctrine.
pub fn check_doctrine(t: &Term, d: &Doctrine) -> Result<(), TermError> {
    let f = d.flags();
    let fail = |constant: &str| {
        Err(TermError::ConstantNotInDoctrine {
            constant: constant.to_string(),
            doctrine: d.to_string(),
        })
    };
    let need = |ok: bool, constant: &str| if ok { Ok(()) } else { fail(constant) };
    match t {
        Term::Gen(_) => Ok(()),
        Term::Id(o) => need(f.monoidal || o.is_atomic_var(), "id on a composite object"),
        Term::Compose(a, b) => {
            check_doctrine(a, d)?;
            check_doctrine(b, d)
        }
        Term::Tensor(a, b) => {
            need(f.monoidal, "tensor")?;
            check_doctrine(a, d)?;
            check_doctrine(b, d)
        }
        Term::Alpha(..) => need(f.monoidal, "alpha"),
        Term::Lambda(..) => need(f.monoidal, "lam"),
        Term::Rho(..) => need(f.monoidal, "rho"),
        Term::Sym(..) => need(f.braided, "sym"),
        Term::Twist(..) => need(f.twist, "twist"),
        Term::Eta(_) => need(f.right_duals, "eta"),
        Term::Eps(_) => need(f.right_duals, "eps"),
        Term::EtaL(_) => need(f.left_duals, "etaL"),
        Term::EpsL(_) => need(f.left_duals, "epsL"),
        Term::Piv(..) => need(f.pivotal, "piv"),
        Term::Copy(_) => need(f.copy_erase, "copy"),
        Term::Erase(_) => need(f.copy_erase, "erase"),
        Term::Merge(_) => need(f.merge_initial, "merge"),
        Term::Init(_) => need(f.merge_initial, "init"),
        Term::TrR(_, body) => {
            need(f.right_trace || f.right_duals, "trR")?;
            check_doctrine(body, d)
        }
        Term::TrL(_, body) => {
            need(f.left_trace || (f.right_duals && f.pivotal), "trL")?;
            check_doctrine(body, d)
        }
        Term::Dagger(body) => {
            need(f.dagger, "dg")?;
            check_doctrine(body, d)
        }
        Term::Mate(body) => {
            need(f.right_duals, "mate")?;
            check_doctrine(body, d)
        }
    }
}

/// Push daggers down to the generators.
///
/// Uses contravariance over composition, unitarity of the structural
/// isomorphisms, the unit/counit adjoint formulas of dagger pivotal
/// categories, trace-dagger commutation, and the self-duality of the
/// (co)diagonal family. The result is equivalent in any dagger doctrine
/// licensing the constants involved, and `Dagger` survives only directly
/// over `Gen` nodes. Idempotent.
pub fn dagger_pushdown(t: &Term) -> Term {
    push(t, false)
}

fn push(t: &Term, flip: bool) -> Term {
    use Term as T;
    match t {
        T::Gen(name) => {
            if flip {
                T::dagger(T::Gen(name.clone()))
            } else {
                T::Gen(name.clone())
            }
        }
        T::Dagger(body) => push(body, !flip),
        T::Id(o) => T::Id(o.clone()),
        T::Compose(a, b) => {
            if flip {
                T::compose(push(b, true), push(a, true))
            } else {
                T::compose(push(a, false), push(b, false))
            }
        }
        T::Tensor(a, b) => T::tensor(push(a, flip), push(b, flip)),
        T::Alpha(a, b, c, inv) => T::Alpha(a.clone(), b.clone(), c.clone(), inv ^ flip),
        T::Lambda(a, inv) => T::Lambda(a.clone(), inv ^ flip),
        T::Rho(a, inv) => T::Rho(a.clone(), inv ^ flip),
        T::Sym(a, b, inv) => T::Sym(a.clone(), b.clone(), inv ^ flip),
        T::Twist(a, inv) => T::Twist(a.clone(), inv ^ flip),
        T::Piv(a, inv) => T::Piv(a.clone(), inv ^ flip),
        T::Eta(a) => {
            if flip {
                dagger_of_eta(a)
            } else {
                T::Eta(a.clone())
            }
        }
        T::Eps(a) => {
            if flip {
                dagger_of_eps(a)
            } else {
                T::Eps(a.clone())
            }
        }
        T::EtaL(a) => {
            if flip {
                dagger_of_eta_l(a)
            } else {
                T::EtaL(a.clone())
            }
        }
        T::EpsL(a) => {
            if flip {
                dagger_of_eps_l(a)
            } else {
                T::EpsL(a.clone())
            }
        }
        T::Copy(a) => {
            if flip {
                T::Merge(a.clone())
            } else {
                T::Copy(a.clone())
            }
        }
        T::Erase(a) => {
            if flip {
                T::Init(a.clone())
            } else {
                T::Erase(a.clone())
            }
        }
        T::Merge(a) => {
            if flip {
                T::Copy(a.clone())
            } else {
                T::Merge(a.clone())
            }
        }
        T::Init(a) => {
            if flip {
                T::Erase(a.clone())
            } else {
                T::Init(a.clone())
            }
        }
        T::TrR(x, body) => T::tr_r(x.clone(), push(body, flip)),
        T::TrL(x, body) => T::tr_l(x.clone(), push(body, flip)),
        T::Mate(body) => T::mate(push(body, flip)),
    }
}

/// `eta(a)^dg : a^r * a -> I`, the counit-side expansion
/// `eps[a^r] . (id[a^r] * piv[a])`.
fn dagger_of_eta(a: &ObjectTerm) -> Term {
    let ar = ObjectTerm::right_dual(a.clone());
    Term::compose(
        Term::Eps(ar.clone()),
        Term::tensor(Term::Id(ar), Term::Piv(a.clone(), false)),
    )
}

/// `eps(a)^dg : I -> a * a^r`, the unit-side expansion
/// `(piv'[a] * id[a^r]) . eta[a^r]`.
fn dagger_of_eps(a: &ObjectTerm) -> Term {
    let ar = ObjectTerm::right_dual(a.clone());
    Term::compose(
        Term::tensor(Term::Piv(a.clone(), true), Term::Id(ar.clone())),
        Term::Eta(ar),
    )
}

/// The pivotal comparison `a^r -> a^l`:
/// `lam[a^l] . (etaDg * id) ... ` packaged via the right-sided counit
/// `a^r * a -> I` (which is exactly `dagger_of_eta`).
pub fn pivotal_left_from_right(a: &ObjectTerm) -> Term {
    use ObjectTerm as O;
    let ar = O::right_dual(a.clone());
    let al = O::left_dual(a.clone());
    // a^r  ~  a^r * I  --id * etaL[a]-->  a^r * (a * a^l)
    //      --assoc-->  (a^r * a) * a^l  --etaDg * id-->  I * a^l  ~  a^l
    Term::seq_all([
        Term::Rho(ar.clone(), true),
        Term::tensor(Term::Id(ar.clone()), Term::EtaL(a.clone())),
        Term::Alpha(ar.clone(), a.clone(), al.clone(), true),
        Term::tensor(dagger_of_eta(a), Term::Id(al.clone())),
        Term::Lambda(al, false),
    ])
}

/// The inverse comparison `a^l -> a^r`, via the unit-side expansion.
pub fn pivotal_right_from_left(a: &ObjectTerm) -> Term {
    use ObjectTerm as O;
    let ar = O::right_dual(a.clone());
    let al = O::left_dual(a.clone());
    // a^l  ~  a^l * I  --id * epsDg[a]-->  a^l * (a * a^r)
    //      --assoc-->  (a^l * a) * a^r  --epsL[a] * id-->  I * a^r  ~  a^r
    Term::seq_all([
        Term::Rho(al.clone(), true),
        Term::tensor(Term::Id(al.clone()), dagger_of_eps(a)),
        Term::Alpha(al.clone(), a.clone(), ar.clone(), true),
        Term::tensor(Term::EpsL(a.clone()), Term::Id(ar.clone())),
        Term::Lambda(ar, false),
    ])
}

/// `etaL(a)^dg : a * a^l -> I` = `eps[a] . (id[a] * (a^l -> a^r))`.
fn dagger_of_eta_l(a: &ObjectTerm) -> Term {
    Term::compose(
        Term::Eps(a.clone()),
        Term::tensor(Term::Id(a.clone()), pivotal_right_from_left(a)),
    )
}

/// `epsL(a)^dg : I -> a^l * a` = `((a^r -> a^l) * id[a]) . eta[a]`.
fn dagger_of_eps_l(a: &ObjectTerm) -> Term {
    Term::compose(
        Term::tensor(pivotal_left_from_right(a), Term::Id(a.clone())),
        Term::Eta(a.clone()),
    )
}

/// The unit/counit sandwich that realizes the adjoint mate of `t`.
///
/// For `t : A -> B` the result has type `B^r -> A^r` and compiles to the
/// same diagram as `Mate(t)` (a box rotated by 180 degrees).
pub fn adjoint_mate(t: &Term, sig: &Signature) -> Result<Term, TermError> {
    use ObjectTerm as O;
    let tt = infer_type(t, sig)?;
    let (a, b) = (tt.dom, tt.cod);
    let ar = O::right_dual(a.clone());
    let br = O::right_dual(b.clone());
    // B^r ~ I * B^r --eta[A] * id--> (A^r * A) * B^r --(id * t) * id-->
    // (A^r * B) * B^r --assoc--> A^r * (B * B^r) --id * eps[B]--> A^r * I ~ A^r
    Ok(Term::seq_all([
        Term::Lambda(br.clone(), true),
        Term::tensor(Term::Eta(a.clone()), Term::Id(br.clone())),
        Term::tensor(
            Term::tensor(Term::Id(ar.clone()), t.clone()),
            Term::Id(br.clone()),
        ),
        Term::Alpha(ar.clone(), b.clone(), br.clone(), false),
        Term::tensor(Term::Id(ar.clone()), Term::Eps(b.clone())),
        Term::Rho(ar, false),
    ]))
}

/// The canonical (non-monoidal) isomorphism `a^rr -> a` available in any
/// braided autonomous category; built from units, counits and the braiding,
/// never a constant.
pub fn lop(a: &ObjectTerm) -> Term {
    use ObjectTerm as O;
    let ar = O::right_dual(a.clone());
    let arr = O::right_dual(ar.clone());
    // a^rr ~ I * a^rr --eta[a] * id--> (a^r * a) * a^rr --assoc-->
    // a^r * (a * a^rr) --id * sym--> a^r * (a^rr * a) --assoc'-->
    // (a^r * a^rr) * a --eps[a^r] * id--> I * a ~ a
    Term::seq_all([
        Term::Lambda(arr.clone(), true),
        Term::tensor(Term::Eta(a.clone()), Term::Id(arr.clone())),
        Term::Alpha(ar.clone(), a.clone(), arr.clone(), false),
        Term::tensor(Term::Id(ar.clone()), Term::Sym(a.clone(), arr.clone(), false)),
        Term::Alpha(ar.clone(), arr.clone(), a.clone(), true),
        Term::tensor(Term::Eps(ar.clone()), Term::Id(a.clone())),
        Term::Lambda(a.clone(), false),
    ])
}

/// The twist expansion `theta_a = lop . piv : a -> a` used in braided
/// pivotal doctrines, where the twist is derived rather than primitive.
pub fn twist_expansion(a: &ObjectTerm, inv: bool) -> Term {
    if inv {
        // theta^-1 = piv' . lop^-1, with lop^-1 built mirror-wise.
        Term::compose(Term::Piv(a.clone(), true), lop_inverse(a))
    } else {
        Term::compose(lop(a), Term::Piv(a.clone(), false))
    }
}

/// Inverse of [`lop`]: `a -> a^rr`.
pub fn lop_inverse(a: &ObjectTerm) -> Term {
    use ObjectTerm as O;
    let ar = O::right_dual(a.clone());
    let arr = O::right_dual(ar.clone());
    // a ~ a * I --id * eta[a^r]--> a * (a^rr * a^r) --sym' move a.. :
    // a * (a^rr * a^r) --assoc'--> (a * a^rr) * a^r --sym^-1 * id-->
    // (a^rr * a) * a^r --assoc--> a^rr * (a * a^r) --id * eps[a]--> a^rr * I ~ a^rr
    Term::seq_all([
        Term::Rho(a.clone(), true),
        Term::tensor(Term::Id(a.clone()), Term::Eta(ar.clone())),
        Term::Alpha(a.clone(), arr.clone(), ar.clone(), true),
        Term::tensor(Term::Sym(arr.clone(), a.clone(), true), Term::Id(ar.clone())),
        Term::Alpha(arr.clone(), a.clone(), ar.clone(), false),
        Term::tensor(Term::Id(arr.clone()), Term::Eps(a.clone())),
        Term::Rho(arr, false),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signature::SignatureKind;
    use ObjectTerm as O;

    fn v(s: &str) -> O {
        O::var(s)
    }

    fn paper_sig() -> Signature {
        // M : A -> B,  N : B * C -> D,  P : D -> E
        let mut sig = Signature::with_objects(SignatureKind::Monoidal, &["A", "B", "C", "D", "E"]);
        sig.add_morphism("M", v("A"), v("B"));
        sig.add_morphism("N", O::tensor(v("B"), v("C")), v("D"));
        sig.add_morphism("P", v("D"), v("E"));
        sig
    }

    #[test]
    fn composite_of_three_boxes_types_as_expected() {
        let sig = paper_sig();
        // P . N . (M * id[C]) : A * C -> E
        let t = Term::compose(
            Term::gen("P"),
            Term::compose(
                Term::gen("N"),
                Term::tensor(Term::gen("M"), Term::Id(v("C"))),
            ),
        );
        let ty = infer_type(&t, &sig).unwrap();
        assert_eq!(ty.dom, O::tensor(v("A"), v("C")));
        assert_eq!(ty.cod, v("E"));
    }

    #[test]
    fn identity_types() {
        let sig = paper_sig();
        let ty = infer_type(&Term::Id(v("A")), &sig).unwrap();
        assert_eq!(ty, MorphismType::new(v("A"), v("A")));
    }

    #[test]
    fn eps_after_eta_is_a_type_error() {
        let sig = paper_sig();
        // eta[A] : I -> A^r * A but eps[A] : A * A^r -> I; composing fails.
        let t = Term::compose(Term::Eps(v("A")), Term::Eta(v("A")));
        let err = infer_type(&t, &sig).unwrap_err();
        assert!(matches!(err, TermError::TypeMismatch { .. }));
    }

    #[test]
    fn unknown_generator_is_reported() {
        let sig = paper_sig();
        assert_eq!(
            infer_type(&Term::gen("Q"), &sig),
            Err(TermError::UnknownGenerator("Q".into()))
        );
    }

    #[test]
    fn doctrine_gating() {
        let planar = Doctrine::parse("planar-monoidal").unwrap();
        let braided = Doctrine::parse("braided-monoidal").unwrap();
        let balanced = Doctrine::parse("balanced-monoidal").unwrap();
        let right_traced = Doctrine::parse("right-traced").unwrap();

        let sym = Term::Sym(v("A"), v("B"), false);
        assert!(check_doctrine(&sym, &planar).is_err());
        assert!(check_doctrine(&sym, &braided).is_ok());

        assert!(check_doctrine(&Term::Twist(v("A"), false), &balanced).is_ok());
        assert!(check_doctrine(&Term::Twist(v("A"), false), &braided).is_err());

        let trl = Term::tr_l(v("X"), Term::gen("f"));
        assert!(check_doctrine(&trl, &right_traced).is_err());
        let trr = Term::tr_r(v("X"), Term::gen("f"));
        assert!(check_doctrine(&trr, &right_traced).is_ok());
    }

    #[test]
    fn trace_typing() {
        let mut sig = Signature::with_objects(SignatureKind::Monoidal, &["A", "B", "X"]);
        sig.add_morphism("f", O::tensor(v("A"), v("X")), O::tensor(v("B"), v("X")));
        let t = Term::tr_r(v("X"), Term::gen("f"));
        let ty = infer_type(&t, &sig).unwrap();
        assert_eq!(ty, MorphismType::new(v("A"), v("B")));
        // Tracing over the wrong object fails.
        let bad = Term::tr_r(v("B"), Term::gen("f"));
        assert!(infer_type(&bad, &sig).is_err());
    }

    #[test]
    fn dagger_pushdown_reverses_composition() {
        let t = Term::dagger(Term::compose(Term::gen("g"), Term::gen("f")));
        let expect = Term::compose(
            Term::dagger(Term::gen("f")),
            Term::dagger(Term::gen("g")),
        );
        assert_eq!(dagger_pushdown(&t), expect);
    }

    #[test]
    fn dagger_pushdown_inverts_braiding() {
        let t = Term::dagger(Term::Sym(v("A"), v("B"), false));
        assert_eq!(dagger_pushdown(&t), Term::Sym(v("A"), v("B"), true));
    }

    #[test]
    fn double_dagger_cancels() {
        let t = Term::dagger(Term::dagger(Term::gen("f")));
        assert_eq!(dagger_pushdown(&t), Term::gen("f"));
    }

    #[test]
    fn pushdown_is_idempotent_and_involutive() {
        let t = Term::dagger(Term::compose(
            Term::tensor(Term::gen("f"), Term::Eta(v("A"))),
            Term::dagger(Term::gen("g")),
        ));
        let once = dagger_pushdown(&t);
        assert_eq!(dagger_pushdown(&once), once);
        let twice_flipped =
            dagger_pushdown(&Term::dagger(dagger_pushdown(&Term::dagger(t.clone()))));
        assert_eq!(twice_flipped, dagger_pushdown(&t));
    }

    #[test]
    fn pushdown_types_swap_exactly_for_outer_dagger() {
        let mut sig = Signature::with_objects(SignatureKind::Autonomous, &["A", "B"]);
        sig.add_morphism("f", v("A"), v("B"));
        let t = Term::dagger(Term::gen("f"));
        let ty_before = infer_type(&t, &sig).unwrap();
        let ty_after = infer_type(&dagger_pushdown(&t), &sig).unwrap();
        assert_eq!(ty_before, ty_after);

        let dagger_eta = Term::dagger(Term::Eta(v("A")));
        let pushed = dagger_pushdown(&dagger_eta);
        let ty1 = infer_type(&dagger_eta, &sig).unwrap();
        let ty2 = infer_type(&pushed, &sig).unwrap();
        assert_eq!(ty1, ty2);
        // and no Dagger nodes survive anywhere but over generators
        fn clean(t: &Term) -> bool {
            match t {
                Term::Dagger(b) => matches!(**b, Term::Gen(_)),
                Term::Compose(a, b) | Term::Tensor(a, b) => clean(a) && clean(b),
                Term::TrR(_, b) | Term::TrL(_, b) | Term::Mate(b) => clean(b),
                _ => true,
            }
        }
        assert!(clean(&pushed));
    }

    #[test]
    fn mate_expansion_types_correctly() {
        let mut sig = Signature::with_objects(SignatureKind::Autonomous, &["A", "B"]);
        sig.add_morphism("f", v("A"), v("B"));
        let m = adjoint_mate(&Term::gen("f"), &sig).unwrap();
        let ty = infer_type(&m, &sig).unwrap();
        assert_eq!(ty, MorphismType::new(O::right_dual(v("B")), O::right_dual(v("A"))));
        // Mate-as-primitive has the same type.
        let ty2 = infer_type(&Term::mate(Term::gen("f")), &sig).unwrap();
        assert_eq!(ty, ty2);
    }

    #[test]
    fn lop_and_twist_expansion_type() {
        let sig = Signature::with_objects(SignatureKind::Autonomous, &["A"]);
        let l = lop(&v("A"));
        let ty = infer_type(&l, &sig).unwrap();
        assert_eq!(ty.dom, O::right_dual(O::right_dual(v("A"))));
        assert_eq!(ty.cod, v("A"));
        let li = lop_inverse(&v("A"));
        let ty = infer_type(&li, &sig).unwrap();
        assert_eq!(ty.cod, O::right_dual(O::right_dual(v("A"))));
        let th = twist_expansion(&v("A"), false);
        let ty = infer_type(&th, &sig).unwrap();
        assert_eq!(ty, MorphismType::new(v("A"), v("A")));
        let th = twist_expansion(&v("A"), true);
        let ty = infer_type(&th, &sig).unwrap();
        assert_eq!(ty, MorphismType::new(v("A"), v("A")));
    }

    #[test]
    fn pivotal_comparisons_type() {
        let sig = Signature::with_objects(SignatureKind::Autonomous, &["A"]);
        let ty = infer_type(&pivotal_left_from_right(&v("A")), &sig).unwrap();
        assert_eq!(ty, MorphismType::new(O::right_dual(v("A")), O::left_dual(v("A"))));
        let ty = infer_type(&pivotal_right_from_left(&v("A")), &sig).unwrap();
        assert_eq!(ty, MorphismType::new(O::left_dual(v("A")), O::right_dual(v("A"))));
    }
}
