//! Identity checkers: the two Novikov laws (graded and ungraded), Lie
//! (super)algebra axioms, the compatibility identity between a product and a
//! bracket, and the type-N/S classifier.
//!
//! Everything is checked on basis triples only; bilinearity extends the
//! verdict to all elements.

use crate::algebra::{sign_is_negative, GradedVector, SuperAlgebra};
use crate::scalar::Scalar;
use std::fmt;
use thiserror::Error;

/// Law checked by the graded left identity:
/// (u∘v)∘w − u∘(v∘w) = (−1)^{ij} ((v∘u)∘w − v∘(u∘w)), i = |u|, j = |v|.
pub const LAW_LEFT_SUPER: &str = "left-super-symmetry";
/// Law checked by the graded right identity:
/// (w∘u)∘v = (−1)^{ij} (w∘v)∘u, i = |u|, j = |v|.
pub const LAW_RIGHT_SUPER: &str = "right-super-commutativity";
/// The left identity with every sign +1 (parity forgotten).
pub const LAW_LEFT_UNGRADED: &str = "left-symmetry";
/// The right identity with every sign +1 (parity forgotten).
pub const LAW_RIGHT_UNGRADED: &str = "right-commutativity";
pub const LAW_GRADING: &str = "grading";
pub const LAW_NOVIKOV_SUPER: &str = "novikov-superalgebra";
pub const LAW_NOVIKOV: &str = "novikov-algebra";
pub const LAW_LIE_SUPER: &str = "lie-superalgebra";
pub const LAW_LIE: &str = "lie-algebra";
pub const LAW_SUPER_SKEW: &str = "super-skew-symmetry";
pub const LAW_SUPER_JACOBI: &str = "super-jacobi";
pub const LAW_SKEW: &str = "skew-symmetry";
pub const LAW_JACOBI: &str = "jacobi";
/// The mixed identity linking a bracket with a Novikov product:
/// [w∘u,v] − (−1)^{ij}[w∘v,u] + [w,u]∘v − (−1)^{ij}[w,v]∘u − w∘[u,v] = 0.
pub const LAW_GD: &str = "gelfand-dorfman";

/// An algebra whose table holds brackets [e_i, e_j] instead of products.
/// Shares the representation of [`SuperAlgebra`]; the distinction is the
/// meaning of the table, so bracket tables can be compared entry-for-entry
/// with product tables.
pub type BracketAlgebra = SuperAlgebra;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LawsError {
    #[error("the product does not respect the grading")]
    NotGraded,
    #[error("the algebra does not satisfy the Novikov superalgebra laws")]
    NotNovikovSuperalgebra,
    #[error("incompatible operands: {0}")]
    Incompatible(String),
}

/// One failed instance of a law: the basis indices it was evaluated at and
/// the nonzero residual (left side minus right side, as a coordinate vector).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: String,
    pub indices: Vec<usize>,
    pub residual: GradedVector,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        let res: Vec<String> = self.residual.coeffs.iter().map(|c| c.to_string()).collect();
        write!(
            f,
            "{} at ({}): residual ({})",
            self.law,
            idx.join(", "),
            res.join(", ")
        )
    }
}

/// Verdict of a law check. `pass` holds exactly when `violations` is empty;
/// `notes` carries human-readable caveats (for example, which sub-laws of an
/// aggregate check failed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub law: String,
    pub pass: bool,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl LawReport {
    pub fn from_violations(law: &str, violations: Vec<Violation>) -> Self {
        LawReport {
            law: law.to_string(),
            pass: violations.is_empty(),
            violations,
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Merge sub-reports into one verdict under a new law name.
    pub fn aggregate(law: &str, parts: Vec<LawReport>) -> Self {
        let mut violations = Vec::new();
        let mut notes = Vec::new();
        for part in parts {
            if !part.pass {
                notes.push(format!("{} fails", part.law));
            }
            violations.extend(part.violations);
            notes.extend(part.notes);
        }
        LawReport {
            law: law.to_string(),
            pass: violations.is_empty(),
            violations,
            notes,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraType {
    N,
    S,
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraType::N => write!(f, "N"),
            AlgebraType::S => write!(f, "S"),
        }
    }
}

/// r ±= (e_x ∘_f e_y) ∘_g e_z
fn acc_then(f: &SuperAlgebra, g: &SuperAlgebra, x: usize, y: usize, z: usize, negate: bool, r: &mut [Scalar]) {
    for (m, c1) in f.basis_product(x, y).iter().enumerate() {
        if c1.is_zero() {
            continue;
        }
        for (t, c2) in g.basis_product(m, z).iter().enumerate() {
            if c2.is_zero() {
                continue;
            }
            let w = c1.mul_raw(c2);
            r[t] = if negate { r[t].sub_raw(&w) } else { r[t].add_raw(&w) };
        }
    }
}

/// r ±= e_x ∘_g (e_y ∘_f e_z)
fn acc_nest(f: &SuperAlgebra, g: &SuperAlgebra, x: usize, y: usize, z: usize, negate: bool, r: &mut [Scalar]) {
    for (m, c1) in f.basis_product(y, z).iter().enumerate() {
        if c1.is_zero() {
            continue;
        }
        for (t, c2) in g.basis_product(x, m).iter().enumerate() {
            if c2.is_zero() {
                continue;
            }
            let w = c1.mul_raw(c2);
            r[t] = if negate { r[t].sub_raw(&w) } else { r[t].add_raw(&w) };
        }
    }
}

fn zero_out(r: &mut [Scalar], alg: &SuperAlgebra) {
    r.fill(alg.field().zero());
}

fn any_nonzero(r: &[Scalar]) -> bool {
    r.iter().any(|c| !c.is_zero())
}

/// Left residual at (u, v, w) = (i, j, k):
/// [(u∘v)∘w − u∘(v∘w)] − (−1)^{|u||v|} [(v∘u)∘w − v∘(u∘w)], sign forced to
/// +1 when `graded` is false.
fn left_residual(alg: &SuperAlgebra, i: usize, j: usize, k: usize, graded: bool, r: &mut [Scalar]) {
    zero_out(r, alg);
    acc_then(alg, alg, i, j, k, false, r);
    acc_nest(alg, alg, i, j, k, true, r);
    let neg = graded && sign_is_negative(alg.parity_of(i), alg.parity_of(j));
    acc_then(alg, alg, j, i, k, !neg, r);
    acc_nest(alg, alg, j, i, k, neg, r);
}

/// Right residual at (w, u, v) = (i, j, k):
/// (w∘u)∘v − (−1)^{|u||v|} (w∘v)∘u, sign forced to +1 when `graded` is false.
fn right_residual(alg: &SuperAlgebra, i: usize, j: usize, k: usize, graded: bool, r: &mut [Scalar]) {
    zero_out(r, alg);
    acc_then(alg, alg, i, j, k, false, r);
    let neg = graded && sign_is_negative(alg.parity_of(j), alg.parity_of(k));
    acc_then(alg, alg, i, k, j, !neg, r);
}

fn law_violations(
    alg: &SuperAlgebra,
    law: &str,
    residual: impl Fn(&SuperAlgebra, usize, usize, usize, &mut [Scalar]),
    stop_at_first: bool,
) -> Vec<Violation> {
    let n = alg.n();
    let mut r = vec![alg.field().zero(); n];
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                residual(alg, i, j, k, &mut r);
                if any_nonzero(&r) {
                    out.push(Violation {
                        law: law.to_string(),
                        indices: vec![i, j, k],
                        residual: GradedVector { coeffs: r.clone() },
                    });
                    if stop_at_first {
                        return out;
                    }
                }
            }
        }
    }
    out
}

fn left_law_report(alg: &SuperAlgebra, graded: bool) -> LawReport {
    let law = if graded { LAW_LEFT_SUPER } else { LAW_LEFT_UNGRADED };
    LawReport::from_violations(
        law,
        law_violations(alg, law, |a, i, j, k, r| left_residual(a, i, j, k, graded, r), false),
    )
}

fn right_law_report(alg: &SuperAlgebra, graded: bool) -> LawReport {
    let law = if graded { LAW_RIGHT_SUPER } else { LAW_RIGHT_UNGRADED };
    LawReport::from_violations(
        law,
        law_violations(alg, law, |a, i, j, k, r| right_residual(a, i, j, k, graded, r), false),
    )
}

fn require_graded(alg: &SuperAlgebra) -> Result<(), LawsError> {
    if alg.grading_ok() {
        Ok(())
    } else {
        Err(LawsError::NotGraded)
    }
}

/// Check the graded left identity on all basis triples (u, v, w); violation
/// indices are recorded in that order.
pub fn check_left_super_symmetry(alg: &SuperAlgebra) -> Result<LawReport, LawsError> {
    require_graded(alg)?;
    Ok(left_law_report(alg, true))
}

/// Check the graded right identity on all basis triples; violation indices
/// are recorded as (w, u, v).
pub fn check_right_super_commutativity(alg: &SuperAlgebra) -> Result<LawReport, LawsError> {
    require_graded(alg)?;
    Ok(right_law_report(alg, true))
}

/// Grading plus both graded identities, aggregated into one report. The
/// identity checks are meaningful regardless of grading, so this never
/// errors; an ungraded table simply fails.
pub fn is_novikov_superalgebra(alg: &SuperAlgebra) -> LawReport {
    LawReport::aggregate(
        LAW_NOVIKOV_SUPER,
        vec![
            alg.is_graded(),
            left_law_report(alg, true),
            right_law_report(alg, true),
        ],
    )
}

/// Both identities with every sign +1 — the same product with the
/// superstructure forgotten. Grading is irrelevant here.
pub fn is_novikov_algebra(alg: &SuperAlgebra) -> LawReport {
    LawReport::aggregate(
        LAW_NOVIKOV,
        vec![left_law_report(alg, false), right_law_report(alg, false)],
    )
}

fn laws_hold(alg: &SuperAlgebra, graded: bool) -> bool {
    let n = alg.n();
    let mut r = vec![alg.field().zero(); n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                right_residual(alg, i, j, k, graded, &mut r);
                if any_nonzero(&r) {
                    return false;
                }
                left_residual(alg, i, j, k, graded, &mut r);
                if any_nonzero(&r) {
                    return false;
                }
            }
        }
    }
    true
}

/// Fast boolean form of [`is_novikov_superalgebra`]: stops at the first
/// failing triple. Used in search hot loops.
pub fn novikov_superalgebra_holds(alg: &SuperAlgebra) -> bool {
    alg.grading_ok() && laws_hold(alg, true)
}

/// Fast boolean form of [`is_novikov_algebra`].
pub fn novikov_algebra_holds(alg: &SuperAlgebra) -> bool {
    laws_hold(alg, false)
}

/// Classify a Novikov superalgebra: type N if the same product also
/// satisfies the ungraded Novikov laws, type S otherwise.
pub fn classify_type(alg: &SuperAlgebra) -> Result<AlgebraType, LawsError> {
    if !novikov_superalgebra_holds(alg) {
        return Err(LawsError::NotNovikovSuperalgebra);
    }
    Ok(if novikov_algebra_holds(alg) {
        AlgebraType::N
    } else {
        AlgebraType::S
    })
}

/// Bracket table [e_i, e_j] = e_i∘e_j − (−1)^{|i||j|} e_j∘e_i.
pub fn super_commutator(alg: &SuperAlgebra) -> BracketAlgebra {
    commutator_table(alg, true)
}

/// Ungraded bracket table [e_i, e_j] = e_i∘e_j − e_j∘e_i.
pub fn commutator(alg: &SuperAlgebra) -> BracketAlgebra {
    commutator_table(alg, false)
}

fn commutator_table(alg: &SuperAlgebra, graded: bool) -> BracketAlgebra {
    let n = alg.n();
    let mut table = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            let neg = graded && sign_is_negative(alg.parity_of(i), alg.parity_of(j));
            for k in 0..n {
                let a = alg.c(i, j, k);
                let b = alg.c(j, i, k);
                table.push(if neg { a.add_raw(b) } else { a.sub_raw(b) });
            }
        }
    }
    SuperAlgebra::from_table(alg.d0(), alg.d1(), alg.field(), table)
        .expect("bracket table inherits the source dimensions and field")
}

fn skew_violations(b: &BracketAlgebra, graded: bool, law: &str) -> Vec<Violation> {
    let n = b.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let neg = graded && sign_is_negative(b.parity_of(i), b.parity_of(j));
            let mut r = Vec::with_capacity(n);
            for t in 0..n {
                let x = b.c(i, j, t);
                let y = b.c(j, i, t);
                r.push(if neg { x.sub_raw(y) } else { x.add_raw(y) });
            }
            if any_nonzero(&r) {
                out.push(Violation {
                    law: law.to_string(),
                    indices: vec![i, j],
                    residual: GradedVector { coeffs: r },
                });
            }
        }
    }
    out
}

fn jacobi_violations(b: &BracketAlgebra, graded: bool, law: &str) -> Vec<Violation> {
    let n = b.n();
    let mut r = vec![b.field().zero(); n];
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (pi, pj, pk) = (b.parity_of(i), b.parity_of(j), b.parity_of(k));
                zero_out(&mut r, b);
                acc_then(b, b, i, j, k, graded && sign_is_negative(pi, pk), &mut r);
                acc_then(b, b, j, k, i, graded && sign_is_negative(pj, pi), &mut r);
                acc_then(b, b, k, i, j, graded && sign_is_negative(pk, pj), &mut r);
                if any_nonzero(&r) {
                    out.push(Violation {
                        law: law.to_string(),
                        indices: vec![i, j, k],
                        residual: GradedVector { coeffs: r.clone() },
                    });
                }
            }
        }
    }
    out
}

/// Lie superalgebra axioms for a bracket table, with the standard sign
/// conventions (made explicit here because different sources differ):
///
/// * super skew symmetry  [u,v] = −(−1)^{|u||v|} [v,u], checked on pairs
///   i ≤ j;
/// * super Jacobi  (−1)^{|u||w|}[[u,v],w] + (−1)^{|v||u|}[[v,w],u] +
///   (−1)^{|w||v|}[[w,u],v] = 0, checked on all triples (u, v, w).
///
/// Over a field of characteristic 2 the signs collapse and skew symmetry
/// degenerates to plain symmetry of the failure 2[u,v]; the stronger
/// alternating condition [u,u] = 0 is not imposed beyond what the stated
/// identity gives. The grading of the table is checked as part of the
/// verdict.
pub fn is_lie_superalgebra(b: &BracketAlgebra) -> LawReport {
    LawReport::aggregate(
        LAW_LIE_SUPER,
        vec![
            b.is_graded(),
            LawReport::from_violations(LAW_SUPER_SKEW, skew_violations(b, true, LAW_SUPER_SKEW)),
            LawReport::from_violations(LAW_SUPER_JACOBI, jacobi_violations(b, true, LAW_SUPER_JACOBI)),
        ],
    )
}

/// Ordinary Lie algebra axioms (all signs +1), for bracket tables viewed
/// with the parity forgotten: skew symmetry [x,y] = −[y,x] and the Jacobi
/// identity [[x,y],z] + [[y,z],x] + [[z,x],y] = 0.
pub fn is_lie_algebra(b: &BracketAlgebra) -> LawReport {
    LawReport::aggregate(
        LAW_LIE,
        vec![
            LawReport::from_violations(LAW_SKEW, skew_violations(b, false, LAW_SKEW)),
            LawReport::from_violations(LAW_JACOBI, jacobi_violations(b, false, LAW_JACOBI)),
        ],
    )
}

/// All products (or brackets) zero.
pub fn is_abelian(alg: &SuperAlgebra) -> bool {
    alg.table().iter().all(Scalar::is_zero)
}

/// The compatibility identity between a product table and a bracket table:
///
/// [w∘u,v] − (−1)^{ij}[w∘v,u] + [w,u]∘v − (−1)^{ij}[w,v]∘u − w∘[u,v] = 0,
///
/// with i = |u|, j = |v|, checked on all basis triples; violation indices
/// are recorded as (u, v, w).
pub fn check_gd(product: &SuperAlgebra, bracket: &BracketAlgebra) -> Result<LawReport, LawsError> {
    if product.d0() != bracket.d0() || product.d1() != bracket.d1() {
        return Err(LawsError::Incompatible(format!(
            "product has dimensions ({}, {}) but bracket has ({}, {})",
            product.d0(),
            product.d1(),
            bracket.d0(),
            bracket.d1()
        )));
    }
    if product.field() != bracket.field() {
        return Err(LawsError::Incompatible(
            "product and bracket are over different fields".to_string(),
        ));
    }
    let n = product.n();
    let mut r = vec![product.field().zero(); n];
    let mut violations = Vec::new();
    for u in 0..n {
        for v in 0..n {
            let neg = sign_is_negative(product.parity_of(u), product.parity_of(v));
            for w in 0..n {
                zero_out(&mut r, product);
                acc_then(product, bracket, w, u, v, false, &mut r);
                acc_then(product, bracket, w, v, u, !neg, &mut r);
                acc_then(bracket, product, w, u, v, false, &mut r);
                acc_then(bracket, product, w, v, u, !neg, &mut r);
                acc_nest(bracket, product, w, u, v, true, &mut r);
                if any_nonzero(&r) {
                    violations.push(Violation {
                        law: LAW_GD.to_string(),
                        indices: vec![u, v, w],
                        residual: GradedVector { coeffs: r.clone() },
                    });
                }
            }
        }
    }
    Ok(LawReport::from_violations(LAW_GD, violations))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldDescriptor;

    fn q() -> FieldDescriptor {
        FieldDescriptor::Rational
    }

    /// All-even 2-dim algebra with e1e1 = e2, e2e1 = e1: fails the left
    /// identity, satisfies the right one.
    fn left_breaker() -> SuperAlgebra {
        SuperAlgebra::from_entries(2, 0, q(), &[(0, 0, 1, q().one()), (1, 0, 0, q().one())])
            .unwrap()
    }

    /// All-even 2-dim algebra with e1e1 = e1, e1e2 = e2: satisfies the left
    /// identity, fails the right one.
    fn right_breaker() -> SuperAlgebra {
        SuperAlgebra::from_entries(2, 0, q(), &[(0, 0, 0, q().one()), (0, 1, 1, q().one())])
            .unwrap()
    }

    /// d0 = d1 = 1, vv = e.
    fn odd_square() -> SuperAlgebra {
        SuperAlgebra::from_entries(1, 1, q(), &[(1, 1, 0, q().one())]).unwrap()
    }

    /// d0 = 1, d1 = 2, uv = e, vu = -e.
    fn odd_pair() -> SuperAlgebra {
        SuperAlgebra::from_entries(
            1,
            2,
            q(),
            &[(1, 2, 0, q().one()), (2, 1, 0, q().integer(-1))],
        )
        .unwrap()
    }

    #[test]
    fn left_breaker_fails_left_only() {
        let a = left_breaker();
        let left = check_left_super_symmetry(&a).unwrap();
        assert!(!left.pass);
        let first = &left.violations[0];
        assert_eq!(first.indices, vec![0, 1, 0]);
        assert_eq!(
            first.residual.coeffs,
            vec![q().zero(), q().integer(-2)]
        );
        assert!(check_right_super_commutativity(&a).unwrap().pass);
        assert!(!is_novikov_superalgebra(&a).pass);
        assert!(!novikov_superalgebra_holds(&a));
    }

    #[test]
    fn right_breaker_fails_right_only() {
        let a = right_breaker();
        assert!(check_left_super_symmetry(&a).unwrap().pass);
        let right = check_right_super_commutativity(&a).unwrap();
        assert!(!right.pass);
        let first = &right.violations[0];
        assert_eq!(first.indices, vec![0, 0, 1]);
        assert_eq!(first.residual.coeffs, vec![q().zero(), q().one()]);
    }

    #[test]
    fn ungraded_input_is_rejected() {
        let bad =
            SuperAlgebra::from_entries(1, 1, q(), &[(0, 0, 1, q().one())]).unwrap();
        assert_eq!(check_left_super_symmetry(&bad), Err(LawsError::NotGraded));
        assert_eq!(
            check_right_super_commutativity(&bad),
            Err(LawsError::NotGraded)
        );
        // the aggregate check reports rather than erroring
        let report = is_novikov_superalgebra(&bad);
        assert!(!report.pass);
        assert!(report.violations.iter().any(|v| v.law == LAW_GRADING));
    }

    #[test]
    fn odd_square_is_novikov_of_type_n() {
        let a = odd_square();
        assert!(is_novikov_superalgebra(&a).pass);
        assert!(is_novikov_algebra(&a).pass);
        assert_eq!(classify_type(&a).unwrap(), AlgebraType::N);
    }

    #[test]
    fn odd_pair_is_novikov_of_type_n() {
        let a = odd_pair();
        assert!(is_novikov_superalgebra(&a).pass);
        assert!(is_novikov_algebra(&a).pass);
        assert_eq!(classify_type(&a).unwrap(), AlgebraType::N);
    }

    #[test]
    fn zero_algebra_is_type_n() {
        for (d0, d1) in [(0, 0), (1, 2), (2, 1), (3, 0)] {
            let a = SuperAlgebra::zero(d0, d1, q());
            assert!(is_novikov_superalgebra(&a).pass);
            assert_eq!(classify_type(&a).unwrap(), AlgebraType::N);
        }
    }

    #[test]
    fn classify_rejects_non_novikov() {
        assert_eq!(
            classify_type(&left_breaker()),
            Err(LawsError::NotNovikovSuperalgebra)
        );
    }

    #[test]
    fn odd_square_brackets() {
        // vv = e: graded bracket [v,v] = 2e, ungraded bracket zero
        let a = odd_square();
        let sb = super_commutator(&a);
        assert_eq!(*sb.c(1, 1, 0), q().integer(2));
        assert!(!is_abelian(&sb));
        let b = commutator(&a);
        assert!(is_abelian(&b));
        assert!(is_lie_superalgebra(&sb).pass);
    }

    #[test]
    fn odd_pair_brackets() {
        // uv = -vu = e: graded bracket zero, ungraded bracket [u,v] = 2e
        let a = odd_pair();
        let sb = super_commutator(&a);
        assert!(is_abelian(&sb));
        let b = commutator(&a);
        assert_eq!(*b.c(1, 2, 0), q().integer(2));
        assert_eq!(*b.c(2, 1, 0), q().integer(-2));
        assert!(is_lie_algebra(&b).pass);
    }

    #[test]
    fn even_bracket_square_fails_skew() {
        // [e,e] = e contradicts [e,e] = -[e,e]
        let b = SuperAlgebra::from_entries(1, 0, q(), &[(0, 0, 0, q().one())]).unwrap();
        let report = is_lie_superalgebra(&b);
        assert!(!report.pass);
        let skew = report
            .violations
            .iter()
            .find(|v| v.law == LAW_SUPER_SKEW)
            .unwrap();
        assert_eq!(skew.indices, vec![0, 0]);
        assert_eq!(skew.residual.coeffs, vec![q().integer(2)]);
    }

    #[test]
    fn gd_holds_for_examples() {
        let a = odd_square();
        assert!(check_gd(&a, &super_commutator(&a)).unwrap().pass);
        let b = odd_pair();
        assert!(check_gd(&b, &super_commutator(&b)).unwrap().pass);
        // the ungraded commutator of the odd-pair algebra also passes: every
        // term of the identity lands in the annihilating even line
        assert!(check_gd(&b, &commutator(&b)).unwrap().pass);
    }

    #[test]
    fn gd_with_zero_bracket_is_vacuous() {
        // every term of the identity contains a bracket or multiplies by
        // a bracket output, so a zero bracket satisfies it for any product
        let a = left_breaker();
        let zero = SuperAlgebra::zero(2, 0, q());
        assert!(check_gd(&a, &zero).unwrap().pass);
    }

    #[test]
    fn gd_rejects_mismatched_shapes() {
        let a = odd_square();
        let b = SuperAlgebra::zero(1, 2, q());
        assert!(matches!(check_gd(&a, &b), Err(LawsError::Incompatible(_))));
        let c = SuperAlgebra::zero(1, 1, FieldDescriptor::gf(5).unwrap());
        assert!(matches!(check_gd(&a, &c), Err(LawsError::Incompatible(_))));
    }

    #[test]
    fn gd_can_fail() {
        // product e1e1 = e1 with bracket [e1,e2] = -[e2,e1] = e2: the terms
        // [w∘u,v] etc. do not cancel
        let a = SuperAlgebra::from_entries(2, 0, q(), &[(0, 0, 0, q().one())]).unwrap();
        let b = SuperAlgebra::from_entries(
            2,
            0,
            q(),
            &[(0, 1, 1, q().one()), (1, 0, 1, q().integer(-1))],
        )
        .unwrap();
        assert!(is_lie_algebra(&b).pass);
        let report = check_gd(&a, &b).unwrap();
        assert!(!report.pass);
    }

    #[test]
    fn super_and_ungraded_agree_on_all_even_tables() {
        // with no odd part every sign is +1, so the two law families and
        // the two brackets coincide
        let a = left_breaker();
        assert_eq!(
            is_novikov_superalgebra(&a).pass,
            is_novikov_algebra(&a).pass
        );
        assert_eq!(super_commutator(&a), commutator(&a));
    }
}
