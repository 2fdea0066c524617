//! Modules over Novikov algebras: the axiom checker, the specialization to
//! one-dimensional base algebras, the catalog T1..T12 of two-dimensional
//! modules, exhaustive finite-field enumeration, equivalence testing, and
//! brute-force verification of the two matrix implications the catalog's
//! case analysis rests on.

use crate::algebra::{GradedVector, SuperAlgebra};
use crate::laws::{novikov_algebra_holds, LawReport, Violation};
use crate::matrix::Matrix;
use crate::scalar::{FieldDescriptor, Scalar};
use std::fmt;
use thiserror::Error;

pub const LAW_MODULE: &str = "novikov-module";
pub const LAW_CATALOG_COMPLETENESS: &str = "catalog-completeness";
/// Implication checked over all 2x2 pairs: (RL=0 and R^2=-LR) implies R^2=0.
pub const LAW_EE_ZERO_R2: &str = "ee-zero-forces-r2-zero";
/// Implication checked over all 2x2 pairs:
/// (RL=L and R^2=R+L-LR and LR!=RL) implies (det L = 0 and tr L != 0).
pub const LAW_EE_IDEM_L_SHAPE: &str = "ee-idempotent-forces-l-shape";

pub const EQ_L_PRODUCT: &str = "L(xy) = R(y)L(x)";
pub const EQ_R_PRODUCT: &str = "R(xy) - R(y)R(x) = L(x)R(y) - R(y)L(x)";
pub const EQ_R_COMMUTE: &str = "R(x)R(y) = R(y)R(x)";
pub const EQ_L_BRACKET: &str = "L(x)L(y) - L(y)L(x) = L(xy - yx)";

pub const EQ0_RL: &str = "RL = 0";
pub const EQ0_R2: &str = "R^2 = -LR";
pub const EQ1_RL: &str = "RL = L";
pub const EQ1_R2: &str = "R^2 = R + L - LR";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("base algebra must be purely even (d1 = 0)")]
    BaseNotEven,
    #[error("base algebra is not a Novikov algebra")]
    NotNovikov,
    #[error("expected {expected} action matrices, got {got}")]
    ActionCount { expected: usize, got: usize },
    #[error("action matrix for basis element {idx} is not {m}x{m}")]
    ActionShape { idx: usize, m: usize },
    #[error("action matrices must share the base algebra's field")]
    FieldMismatch,
    #[error("epsilon must be 0 or 1")]
    BadEpsilon,
    #[error("parameter constraint violated: {0}")]
    ParameterConstraint(String),
    #[error("{0} requires a prime field")]
    NeedsPrimeField(&'static str),
    #[error("exhaustive enumeration over GF({p}) means {count} candidate pairs; pass allow_large to proceed")]
    TooLarge { p: u64, count: u128 },
}

/// A one-dimensional Novikov algebra: a basis {e} with ee = epsilon * e,
/// epsilon in {0, 1}. Every one-dimensional Novikov algebra has a basis of
/// this shape (rescale e when ee != 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NovikovAlgebra1D {
    epsilon: u8,
}

impl NovikovAlgebra1D {
    pub fn new(epsilon: u8) -> Result<Self, ModuleError> {
        if epsilon > 1 {
            return Err(ModuleError::BadEpsilon);
        }
        Ok(NovikovAlgebra1D { epsilon })
    }

    pub fn epsilon(&self) -> u8 {
        self.epsilon
    }

    /// The structure-constant form over a chosen field.
    pub fn algebra(&self, field: FieldDescriptor) -> SuperAlgebra {
        let e = if self.epsilon == 1 { field.one() } else { field.zero() };
        SuperAlgebra::from_entries(1, 0, field, &[(0, 0, 0, e)])
            .expect("one-dimensional table is always well-formed")
    }
}

/// A module over a Novikov algebra: per base basis element x, the matrices
/// of the actions L(x): v -> x.v and R(x): v -> v.x on a chosen module
/// basis (columns are images of basis vectors).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NovikovModule {
    base: SuperAlgebra,
    dim: usize,
    l: Vec<Matrix>,
    r: Vec<Matrix>,
}

impl NovikovModule {
    pub fn new(
        base: SuperAlgebra,
        dim: usize,
        l: Vec<Matrix>,
        r: Vec<Matrix>,
    ) -> Result<Self, ModuleError> {
        if base.d1() != 0 {
            return Err(ModuleError::BaseNotEven);
        }
        let n = base.n();
        if l.len() != n {
            return Err(ModuleError::ActionCount { expected: n, got: l.len() });
        }
        if r.len() != n {
            return Err(ModuleError::ActionCount { expected: n, got: r.len() });
        }
        for (idx, mat) in l.iter().chain(r.iter()).enumerate() {
            if mat.rows() != dim || mat.cols() != dim {
                return Err(ModuleError::ActionShape { idx: idx % n, m: dim });
            }
            if mat.field() != base.field() {
                return Err(ModuleError::FieldMismatch);
            }
        }
        Ok(NovikovModule { base, dim, l, r })
    }

    pub fn base(&self) -> &SuperAlgebra {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn l(&self, idx: usize) -> &Matrix {
        &self.l[idx]
    }

    pub fn r(&self, idx: usize) -> &Matrix {
        &self.r[idx]
    }

    pub fn l_matrices(&self) -> &[Matrix] {
        &self.l
    }

    pub fn r_matrices(&self) -> &[Matrix] {
        &self.r
    }

    /// L extended linearly to the product xy of base basis elements:
    /// L(xy) = sum_k c[x][y][k] L(e_k), and likewise for R.
    fn action_of_product(&self, mats: &[Matrix], x: usize, y: usize) -> Matrix {
        let field = self.base.field();
        let mut out = Matrix::zero(self.dim, self.dim, field);
        for (k, coeff) in self.base.basis_product(x, y).iter().enumerate() {
            if !coeff.is_zero() {
                out = out
                    .add(&mats[k].scale(coeff))
                    .expect("action matrices share dimensions");
            }
        }
        out
    }
}

fn matrix_residual_violation(law: &str, x: usize, y: usize, diff: Matrix) -> Option<Violation> {
    if diff.is_zero() {
        return None;
    }
    Some(Violation {
        law: law.to_string(),
        indices: vec![x, y],
        residual: GradedVector { coeffs: diff.entries().to_vec() },
    })
}

/// Check the four module equations for every base basis pair (x, y):
///
///   L(xy) = R(y)L(x)
///   R(xy) - R(y)R(x) = L(x)R(y) - R(y)L(x)
///   R(x)R(y) = R(y)R(x)
///   L(x)L(y) - L(y)L(x) = L(xy - yx)
///
/// Residuals are the left-minus-right matrices, flattened row-major. The
/// base must itself satisfy the (ungraded) Novikov laws.
pub fn check_module_axioms(module: &NovikovModule) -> Result<LawReport, ModuleError> {
    if !novikov_algebra_holds(module.base()) {
        return Err(ModuleError::NotNovikov);
    }
    let n = module.base().n();
    let mut violations = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let lx = module.l(x);
            let ly = module.l(y);
            let rx = module.r(x);
            let ry = module.r(y);
            let mul = |a: &Matrix, b: &Matrix| a.mul(b).expect("square matrices of equal size");
            let sub = |a: &Matrix, b: &Matrix| a.sub(b).expect("square matrices of equal size");

            let lhs = module.action_of_product(&module.l, x, y);
            violations.extend(matrix_residual_violation(
                EQ_L_PRODUCT,
                x,
                y,
                sub(&lhs, &mul(ry, lx)),
            ));

            let lhs = sub(&module.action_of_product(&module.r, x, y), &mul(ry, rx));
            let rhs = sub(&mul(lx, ry), &mul(ry, lx));
            violations.extend(matrix_residual_violation(EQ_R_PRODUCT, x, y, sub(&lhs, &rhs)));

            violations.extend(matrix_residual_violation(
                EQ_R_COMMUTE,
                x,
                y,
                sub(&mul(rx, ry), &mul(ry, rx)),
            ));

            let lhs = sub(&mul(lx, ly), &mul(ly, lx));
            let bracket = sub(
                &module.action_of_product(&module.l, x, y),
                &module.action_of_product(&module.l, y, x),
            );
            violations.extend(matrix_residual_violation(EQ_L_BRACKET, x, y, sub(&lhs, &bracket)));
        }
    }
    Ok(LawReport::aggregate(
        LAW_MODULE,
        vec![LawReport::from_violations(LAW_MODULE, violations)],
    ))
}

/// The module equations specialized to a one-dimensional base with ee =
/// epsilon * e and a single pair of action matrices L, R:
///
///   epsilon = 0:  RL = 0          and  R^2 = -LR
///   epsilon = 1:  RL = L          and  R^2 = R + L - LR
///
/// For one-dimensional bases this system has exactly the same solutions as
/// the four general equations.
pub fn one_dim_module_equations(epsilon: u8, l: &Matrix, r: &Matrix) -> Result<LawReport, ModuleError> {
    if epsilon > 1 {
        return Err(ModuleError::BadEpsilon);
    }
    if l.rows() != r.rows() || l.cols() != r.cols() || !l.is_square() {
        return Err(ModuleError::ActionShape { idx: 0, m: l.rows() });
    }
    if l.field() != r.field() {
        return Err(ModuleError::FieldMismatch);
    }
    let mul = |a: &Matrix, b: &Matrix| a.mul(b).expect("square matrices of equal size");
    let sub = |a: &Matrix, b: &Matrix| a.sub(b).expect("square matrices of equal size");
    let rl = mul(r, l);
    let r2 = mul(r, r);
    let lr = mul(l, r);
    let mut violations = Vec::new();
    if epsilon == 0 {
        violations.extend(matrix_residual_violation(EQ0_RL, 0, 0, rl));
        violations.extend(matrix_residual_violation(EQ0_R2, 0, 0, sub(&r2, &lr.neg())));
    } else {
        violations.extend(matrix_residual_violation(EQ1_RL, 0, 0, sub(&rl, l)));
        let rhs = sub(&r.add(l).expect("same shape"), &lr);
        violations.extend(matrix_residual_violation(EQ1_R2, 0, 0, sub(&r2, &rhs)));
    }
    Ok(LawReport::aggregate(
        LAW_MODULE,
        vec![LawReport::from_violations(LAW_MODULE, violations)],
    ))
}

/// Fast boolean form of [`one_dim_module_equations`] for enumeration loops.
pub fn one_dim_equations_hold(epsilon: u8, l: &Matrix, r: &Matrix) -> bool {
    let mul = |a: &Matrix, b: &Matrix| a.mul(b).expect("square matrices of equal size");
    let rl = mul(r, l);
    if epsilon == 0 {
        if !rl.is_zero() {
            return false;
        }
        mul(r, r) == mul(l, r).neg()
    } else {
        if rl != *l {
            return false;
        }
        let rhs = r
            .add(l)
            .and_then(|s| s.sub(&mul(l, r)))
            .expect("same shape");
        mul(r, r) == rhs
    }
}

/// The twelve rows of the two-dimensional module catalog over a
/// one-dimensional Novikov algebra, with their parameters. Tags T1..T6 sit
/// over ee = 0, tags T7..T12 over ee = e.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogTag {
    T1,
    T2 { a: Scalar },
    T3,
    T4,
    T5 { a: Scalar },
    T6 { a: Scalar },
    T7,
    T8 { a: Scalar },
    T9 { a: Scalar },
    T10 { a: Scalar },
    T11 { a1: Scalar, a2: Scalar },
    T12 { b: Scalar },
}

impl CatalogTag {
    pub fn name(&self) -> &'static str {
        match self {
            CatalogTag::T1 => "T1",
            CatalogTag::T2 { .. } => "T2",
            CatalogTag::T3 => "T3",
            CatalogTag::T4 => "T4",
            CatalogTag::T5 { .. } => "T5",
            CatalogTag::T6 { .. } => "T6",
            CatalogTag::T7 => "T7",
            CatalogTag::T8 { .. } => "T8",
            CatalogTag::T9 { .. } => "T9",
            CatalogTag::T10 { .. } => "T10",
            CatalogTag::T11 { .. } => "T11",
            CatalogTag::T12 { .. } => "T12",
        }
    }

    pub fn epsilon(&self) -> u8 {
        match self {
            CatalogTag::T1
            | CatalogTag::T2 { .. }
            | CatalogTag::T3
            | CatalogTag::T4
            | CatalogTag::T5 { .. }
            | CatalogTag::T6 { .. } => 0,
            _ => 1,
        }
    }

    pub fn all_names() -> [&'static str; 12] {
        ["T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10", "T11", "T12"]
    }
}

impl fmt::Display for CatalogTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogTag::T2 { a }
            | CatalogTag::T5 { a }
            | CatalogTag::T6 { a }
            | CatalogTag::T8 { a }
            | CatalogTag::T9 { a }
            | CatalogTag::T10 { a } => write!(f, "{}[a={}]", self.name(), a),
            CatalogTag::T11 { a1, a2 } => write!(f, "{}[a1={}, a2={}]", self.name(), a1, a2),
            CatalogTag::T12 { b } => write!(f, "{}[b={}]", self.name(), b),
            _ => write!(f, "{}", self.name()),
        }
    }
}

fn require_field(field: FieldDescriptor, params: &[&Scalar]) -> Result<(), ModuleError> {
    if params.iter().any(|s| s.field() != field) {
        return Err(ModuleError::FieldMismatch);
    }
    Ok(())
}

/// Instantiate a catalog row over the given field. Parameter scalars must
/// belong to that field; T11 requires a1 != a2 and T12 requires b != 0.
pub fn catalog_instantiate(
    tag: &CatalogTag,
    field: FieldDescriptor,
) -> Result<(NovikovAlgebra1D, NovikovModule), ModuleError> {
    let zero = || Matrix::zero(2, 2, field);
    let ident = || Matrix::identity(2, field);
    let f0 = field.zero();
    let f1 = field.one();
    let rows = |entries: [[Scalar; 2]; 2]| {
        let vecs: Vec<Vec<Scalar>> = entries.into_iter().map(|r| r.to_vec()).collect();
        Matrix::from_rows(field, &vecs)
    };
    let (l, r) = match tag {
        CatalogTag::T1 => (zero(), zero()),
        CatalogTag::T2 { a } => {
            require_field(field, &[a])?;
            (rows([[f1.clone(), f0.clone()], [f0.clone(), a.clone()]]), zero())
        }
        CatalogTag::T3 => (rows([[f0.clone(), f0.clone()], [f1.clone(), f0.clone()]]), zero()),
        CatalogTag::T4 => (
            rows([[f1.clone(), f0.clone()], [f1.clone(), f1.clone()]]),
            zero(),
        ),
        CatalogTag::T5 { a } => {
            require_field(field, &[a])?;
            (
                rows([[f0.clone(), f0.clone()], [a.clone(), f0.clone()]]),
                rows([[f0.clone(), f0.clone()], [f1.clone(), f0.clone()]]),
            )
        }
        CatalogTag::T6 { a } => {
            require_field(field, &[a])?;
            (
                rows([[f0.clone(), f0.clone()], [a.clone(), f1.clone()]]),
                rows([[f0.clone(), f0.clone()], [f1.clone(), f0.clone()]]),
            )
        }
        CatalogTag::T7 => (zero(), zero()),
        CatalogTag::T8 { a } => {
            require_field(field, &[a])?;
            (
                rows([[a.clone(), f0.clone()], [f0.clone(), f0.clone()]]),
                rows([[f1.clone(), f0.clone()], [f0.clone(), f0.clone()]]),
            )
        }
        CatalogTag::T9 { a } => {
            require_field(field, &[a])?;
            (
                rows([[a.clone(), f0.clone()], [f0.clone(), a.clone()]]),
                ident(),
            )
        }
        CatalogTag::T10 { a } => {
            require_field(field, &[a])?;
            (
                rows([[a.clone(), f0.clone()], [f1.clone(), a.clone()]]),
                ident(),
            )
        }
        CatalogTag::T11 { a1, a2 } => {
            require_field(field, &[a1, a2])?;
            if a1 == a2 {
                return Err(ModuleError::ParameterConstraint("T11 requires a1 != a2".into()));
            }
            (
                rows([[a1.clone(), f0.clone()], [f0.clone(), a2.clone()]]),
                ident(),
            )
        }
        CatalogTag::T12 { b } => {
            require_field(field, &[b])?;
            if b.is_zero() {
                return Err(ModuleError::ParameterConstraint("T12 requires b != 0".into()));
            }
            (
                rows([[f1.neg(), f0.clone()], [f0.clone(), f0.clone()]]),
                rows([[f1.clone(), b.clone()], [f0.clone(), f1.clone()]]),
            )
        }
    };
    let alg = NovikovAlgebra1D::new(tag.epsilon())?;
    let module = NovikovModule::new(alg.algebra(field), 2, vec![l], vec![r])?;
    Ok((alg, module))
}

/// All catalog rows instantiated with every admissible parameter value of a
/// prime field, in tag order then parameter order.
pub fn catalog_tags_gf(field: FieldDescriptor) -> Result<Vec<CatalogTag>, ModuleError> {
    if field.order().is_none() {
        return Err(ModuleError::NeedsPrimeField("catalog parameter sweep"));
    }
    let elems = field.elements().expect("prime fields are enumerable");
    let mut tags = vec![CatalogTag::T1];
    tags.extend(elems.iter().map(|a| CatalogTag::T2 { a: a.clone() }));
    tags.push(CatalogTag::T3);
    tags.push(CatalogTag::T4);
    tags.extend(elems.iter().map(|a| CatalogTag::T5 { a: a.clone() }));
    tags.extend(elems.iter().map(|a| CatalogTag::T6 { a: a.clone() }));
    tags.push(CatalogTag::T7);
    tags.extend(elems.iter().map(|a| CatalogTag::T8 { a: a.clone() }));
    tags.extend(elems.iter().map(|a| CatalogTag::T9 { a: a.clone() }));
    tags.extend(elems.iter().map(|a| CatalogTag::T10 { a: a.clone() }));
    for a1 in &elems {
        for a2 in &elems {
            if a1 != a2 {
                tags.push(CatalogTag::T11 { a1: a1.clone(), a2: a2.clone() });
            }
        }
    }
    tags.extend(
        elems
            .iter()
            .filter(|b| !b.is_zero())
            .map(|b| CatalogTag::T12 { b: b.clone() }),
    );
    Ok(tags)
}

fn check_enumeration_size(p: u64, allow_large: bool) -> Result<(), ModuleError> {
    let count = (p as u128).pow(8);
    if p > 3 && !allow_large {
        return Err(ModuleError::TooLarge { p, count });
    }
    Ok(())
}

/// All 2x2 matrices over a prime field in lexicographic entry order.
fn all_matrices_gf(field: FieldDescriptor) -> Vec<Matrix> {
    let elems = field.elements().expect("prime fields are enumerable");
    let mut out = Vec::with_capacity(elems.len().pow(4));
    for a in &elems {
        for b in &elems {
            for c in &elems {
                for d in &elems {
                    out.push(Matrix::from_rows(
                        field,
                        &[vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]],
                    ));
                }
            }
        }
    }
    out
}

/// Exhaustively enumerate the (L, R) pairs of 2x2 matrices over GF(p)
/// satisfying the one-dimensional module equations for the given epsilon.
/// Output is duplicate-free and lexicographic in the 8 entries (L first).
/// Capped at p <= 3 unless `allow_large`.
pub fn enumerate_modules_gf(
    p: u64,
    epsilon: u8,
    allow_large: bool,
) -> Result<Vec<(Matrix, Matrix)>, ModuleError> {
    if epsilon > 1 {
        return Err(ModuleError::BadEpsilon);
    }
    let field = FieldDescriptor::gf(p).map_err(|_| ModuleError::NeedsPrimeField("enumeration"))?;
    check_enumeration_size(p, allow_large)?;
    let mats = all_matrices_gf(field);
    let mut out = Vec::new();
    for l in &mats {
        for r in &mats {
            if one_dim_equations_hold(epsilon, l, r) {
                out.push((l.clone(), r.clone()));
            }
        }
    }
    Ok(out)
}

/// All invertible 2x2 matrices over a prime field, with their inverses.
pub(crate) fn gl2(field: FieldDescriptor) -> Vec<(Matrix, Matrix)> {
    all_matrices_gf(field)
        .into_iter()
        .filter_map(|p| p.inverse().ok().map(|inv| (p, inv)))
        .collect()
}

fn equivalent_with(
    epsilon: u8,
    m1: &(Matrix, Matrix),
    m2: &(Matrix, Matrix),
    gl: &[(Matrix, Matrix)],
    scalars: &[Scalar],
) -> bool {
    let mul = |a: &Matrix, b: &Matrix| a.mul(b).expect("2x2");
    for (p, p_inv) in gl {
        let l_conj = mul(&mul(p, &m1.0), p_inv);
        let r_conj = mul(&mul(p, &m1.1), p_inv);
        if epsilon == 1 {
            if l_conj == m2.0 && r_conj == m2.1 {
                return true;
            }
        } else {
            for s in scalars {
                if l_conj.scale(s) == m2.0 && r_conj.scale(s) == m2.1 {
                    return true;
                }
            }
        }
    }
    false
}

fn nonzero_scalars(field: FieldDescriptor) -> Vec<Scalar> {
    field
        .elements()
        .expect("prime fields are enumerable")
        .into_iter()
        .filter(|s| !s.is_zero())
        .collect()
}

/// Whether two (L, R) pairs present the same module in different bases:
/// simultaneous conjugation by some invertible P, combined (only when the
/// base has ee = 0, where e itself may be rescaled) with simultaneous
/// scaling of both matrices by some s != 0. Brute force over GL2(GF(p)).
pub fn module_equivalent(
    epsilon: u8,
    m1: &(Matrix, Matrix),
    m2: &(Matrix, Matrix),
) -> Result<bool, ModuleError> {
    if epsilon > 1 {
        return Err(ModuleError::BadEpsilon);
    }
    let field = m1.0.field();
    if field.order().is_none() {
        return Err(ModuleError::NeedsPrimeField("equivalence search"));
    }
    if [&m1.1, &m2.0, &m2.1].iter().any(|m| m.field() != field) {
        return Err(ModuleError::FieldMismatch);
    }
    let gl = gl2(field);
    let scalars = nonzero_scalars(field);
    Ok(equivalent_with(epsilon, m1, m2, &gl, &scalars))
}

/// For each epsilon, check that every enumerated (L, R) solution over GF(p)
/// is equivalent to some catalog instance with parameters drawn from GF(p).
/// Solutions matching no row are reported as violations (the orphan pair,
/// flattened L then R), never silently dropped.
pub fn verify_catalog_completeness(p: u64, allow_large: bool) -> Result<LawReport, ModuleError> {
    let field = FieldDescriptor::gf(p).map_err(|_| ModuleError::NeedsPrimeField("completeness"))?;
    let gl = gl2(field);
    let scalars = nonzero_scalars(field);
    let tags = catalog_tags_gf(field)?;
    let mut violations = Vec::new();
    let mut notes = Vec::new();
    for epsilon in [0u8, 1u8] {
        let instances: Vec<(CatalogTag, (Matrix, Matrix))> = tags
            .iter()
            .filter(|t| t.epsilon() == epsilon)
            .map(|t| {
                let (_, module) = catalog_instantiate(t, field).expect("sweep respects constraints");
                (t.clone(), (module.l(0).clone(), module.r(0).clone()))
            })
            .collect();
        let solutions = enumerate_modules_gf(p, epsilon, allow_large)?;
        let mut orphans = 0usize;
        for pair in &solutions {
            let matched = instances
                .iter()
                .any(|(_, inst)| equivalent_with(epsilon, pair, inst, &gl, &scalars));
            if !matched {
                orphans += 1;
                let mut coeffs = pair.0.entries().to_vec();
                coeffs.extend_from_slice(pair.1.entries());
                violations.push(Violation {
                    law: LAW_CATALOG_COMPLETENESS.to_string(),
                    indices: vec![epsilon as usize],
                    residual: GradedVector { coeffs },
                });
            }
        }
        notes.push(format!(
            "ee = {}: {} solutions over GF({}), {} matched to catalog rows, {} orphans",
            if epsilon == 0 { "0" } else { "e" },
            solutions.len(),
            p,
            solutions.len() - orphans,
            orphans
        ));
    }
    let mut report = LawReport::from_violations(LAW_CATALOG_COMPLETENESS, violations);
    report.notes = notes;
    Ok(report)
}

/// Brute-force check over all 2x2 pairs (L, R) over GF(p):
/// if RL = 0 and R^2 = -LR, then R^2 = 0.
pub fn check_claim_ee_zero(p: u64) -> Result<LawReport, ModuleError> {
    let field = FieldDescriptor::gf(p).map_err(|_| ModuleError::NeedsPrimeField("claim check"))?;
    let mats = all_matrices_gf(field);
    let mul = |a: &Matrix, b: &Matrix| a.mul(b).expect("2x2");
    let mut violations = Vec::new();
    let mut premise_count = 0u64;
    for l in &mats {
        for r in &mats {
            if !mul(r, l).is_zero() {
                continue;
            }
            let r2 = mul(r, r);
            if r2 != mul(l, r).neg() {
                continue;
            }
            premise_count += 1;
            if !r2.is_zero() {
                let mut coeffs = l.entries().to_vec();
                coeffs.extend_from_slice(r.entries());
                violations.push(Violation {
                    law: LAW_EE_ZERO_R2.to_string(),
                    indices: vec![],
                    residual: GradedVector { coeffs },
                });
            }
        }
    }
    let total = (p as u128).pow(8);
    Ok(
        LawReport::from_violations(LAW_EE_ZERO_R2, violations).with_note(format!(
            "examined all {} pairs over GF({}); {} satisfied the premises",
            total, p, premise_count
        )),
    )
}

/// Brute-force check over all 2x2 pairs (L, R) over GF(p):
/// if RL = L, R^2 = R + L - LR and LR != RL, then det L = 0 and tr L != 0.
///
/// The conclusion is the basis-free form of "L is similar to diag(a, 0)
/// for some a != 0": a 2x2 matrix is similar to such a diagonal exactly
/// when it is singular with nonzero trace (the trace is then a).
pub fn check_claim_ee_idempotent(p: u64) -> Result<LawReport, ModuleError> {
    let field = FieldDescriptor::gf(p).map_err(|_| ModuleError::NeedsPrimeField("claim check"))?;
    let mats = all_matrices_gf(field);
    let mul = |a: &Matrix, b: &Matrix| a.mul(b).expect("2x2");
    let mut violations = Vec::new();
    let mut premise_count = 0u64;
    for l in &mats {
        for r in &mats {
            let rl = mul(r, l);
            if rl != *l {
                continue;
            }
            let lr = mul(l, r);
            let rhs = r.add(l).and_then(|s| s.sub(&lr)).expect("2x2");
            if mul(r, r) != rhs {
                continue;
            }
            if lr == rl {
                continue;
            }
            premise_count += 1;
            let det = l
                .get(0, 0)
                .mul_raw(l.get(1, 1))
                .sub_raw(&l.get(0, 1).mul_raw(l.get(1, 0)));
            let tr = l.get(0, 0).add_raw(l.get(1, 1));
            if !det.is_zero() || tr.is_zero() {
                let mut coeffs = l.entries().to_vec();
                coeffs.extend_from_slice(r.entries());
                violations.push(Violation {
                    law: LAW_EE_IDEM_L_SHAPE.to_string(),
                    indices: vec![],
                    residual: GradedVector { coeffs },
                });
            }
        }
    }
    let total = (p as u128).pow(8);
    Ok(
        LawReport::from_violations(LAW_EE_IDEM_L_SHAPE, violations).with_note(format!(
            "examined all {} pairs over GF({}); {} satisfied the premises",
            total, p, premise_count
        )),
    )
}
