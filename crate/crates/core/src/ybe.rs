//! The alternative Yang–Baxter equation (AYBE), the PA-equations, and the
//! operator and form pictures of their solutions.
//!
//! Tensor legs are placed with [`pair_product`]: in `r_ab ⋄ s_cd` the legs
//! of `r` sit in slots `a`, `b`, those of `s` in `c`, `d`, and in the one
//! shared slot the leg of `r` multiplies the leg of `s` from the left. Every
//! mixed term of the PA-equations uses this same positional rule.

use rayon::prelude::*;

use crate::altalg::{
    alt_dual_bimodule, check_form, dual_labels, semidirect_unchecked, AltBimoduleAction, AlternativeAlgebra, FormKind,
};
use crate::construct::{al_induce, check_al_operator, dual_regular, dual_split, image_structure};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::{vsub, Matrix, Vector};
use crate::prealt::{
    associated_algebra, check_2cocycle, check_prealternative, prealt_dual_bimodule, prealt_semidirect_unchecked,
    PreAltBimoduleAction, PreAlternativeAlgebra,
};
use crate::report::{violation, CheckReport, Violation};
use crate::tensor::{map_to_form, pair_product, BilinearForm, Product, Slots, Tensor2, Tensor3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AybeVariant {
    /// `r23∘r12 − r12∘r13 − r13∘r23`
    A1,
    /// `r12∘r23 − r23∘r13 − r13∘r12`
    A2,
}

fn check_dims(n: usize, r: &Tensor2) -> Result<()> {
    if r.dim() != n {
        return Err(Error::DimensionMismatch(format!("tensor has dimension {}, algebra {}", r.dim(), n)));
    }
    Ok(())
}

fn combination(r: &Tensor2, terms: &[(bool, Slots, Slots, &Product)]) -> Result<Tensor3> {
    let mut acc: Option<Tensor3> = None;
    for &(plus, a, b, prod) in terms {
        let t = pair_product(r, a, r, b, prod)?;
        let t = if plus { t } else { t.neg() };
        acc = Some(match acc {
            None => t,
            Some(s) => s.add(&t),
        });
    }
    Ok(acc.expect("at least one term"))
}

pub fn aybe_residual(a: &AlternativeAlgebra, r: &Tensor2, variant: AybeVariant) -> Result<Tensor3> {
    check_dims(a.dim(), r)?;
    let m = a.product();
    let terms = match variant {
        AybeVariant::A1 => [(true, (2, 3), (1, 2), m), (false, (1, 2), (1, 3), m), (false, (1, 3), (2, 3), m)],
        AybeVariant::A2 => [(true, (1, 2), (2, 3), m), (false, (2, 3), (1, 3), m), (false, (1, 3), (1, 2), m)],
    };
    combination(r, &terms)
}

#[derive(Clone, Copy)]
enum Op {
    Circ,
    Prec,
    Succ,
}

/// Each PA-equation as `(sign, slots of r, slots of s, product)`.
const PA_TERMS: [[(bool, Slots, Slots, Op); 3]; 6] = [
    [(true, (1, 2), (1, 3), Op::Circ), (false, (2, 3), (1, 2), Op::Succ), (false, (1, 3), (2, 3), Op::Prec)],
    [(true, (1, 3), (1, 2), Op::Circ), (false, (1, 2), (2, 3), Op::Prec), (false, (2, 3), (1, 3), Op::Succ)],
    [(true, (1, 2), (2, 3), Op::Circ), (false, (2, 3), (1, 3), Op::Prec), (false, (1, 3), (1, 2), Op::Succ)],
    [(true, (2, 3), (1, 2), Op::Circ), (false, (1, 3), (2, 3), Op::Succ), (false, (1, 2), (1, 3), Op::Prec)],
    [(true, (1, 3), (2, 3), Op::Circ), (false, (1, 2), (1, 3), Op::Succ), (false, (2, 3), (1, 2), Op::Prec)],
    [(true, (2, 3), (1, 3), Op::Circ), (false, (1, 3), (1, 2), Op::Prec), (false, (1, 2), (2, 3), Op::Succ)],
];

/// The six PA-equation residuals and their pairwise sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaResiduals {
    terms: [Tensor3; 6],
    sums: [Tensor3; 3],
}

impl PaResiduals {
    pub const NAMES: [&'static str; 6] = ["PA_1^1", "PA_1^2", "PA_2^1", "PA_2^2", "PA_3^1", "PA_3^2"];
    pub const SUM_NAMES: [&'static str; 3] = ["PA_1", "PA_2", "PA_3"];

    fn from_terms(terms: [Tensor3; 6]) -> Self {
        let sums = [0, 1, 2].map(|j| terms[2 * j].add(&terms[2 * j + 1]));
        PaResiduals { terms, sums }
    }

    /// `PA_j^k` for `j ∈ 1..=3`, `k ∈ 1..=2`.
    pub fn term(&self, j: usize, k: usize) -> &Tensor3 {
        assert!((1..=3).contains(&j) && (1..=2).contains(&k), "PA_{j}^{k} does not exist");
        &self.terms[2 * (j - 1) + (k - 1)]
    }

    /// `PA_j = PA_j^1 + PA_j^2`.
    pub fn sum(&self, j: usize) -> &Tensor3 {
        assert!((1..=3).contains(&j), "PA_{j} does not exist");
        &self.sums[j - 1]
    }

    pub fn get(&self, name: &str) -> Option<&Tensor3> {
        Self::NAMES
            .iter()
            .position(|n| *n == name)
            .map(|i| &self.terms[i])
            .or_else(|| Self::SUM_NAMES.iter().position(|n| *n == name).map(|i| &self.sums[i]))
    }

    /// The six equations in order, with their names.
    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &Tensor3)> {
        Self::NAMES.into_iter().zip(self.terms.iter())
    }

    pub fn all_zero(&self) -> bool {
        self.terms.iter().all(Tensor3::is_zero)
    }
}

pub fn pa_residuals(p: &PreAlternativeAlgebra, r: &Tensor2) -> Result<PaResiduals> {
    check_dims(p.dim(), r)?;
    let pick = |op: Op| match op {
        Op::Circ => p.circ(),
        Op::Prec => p.prec(),
        Op::Succ => p.succ(),
    };
    let mut out = Vec::with_capacity(6);
    for eq in &PA_TERMS {
        let terms: Vec<_> = eq.iter().map(|&(s, a, b, op)| (s, a, b, pick(op))).collect();
        out.push(combination(r, &terms)?);
    }
    Ok(PaResiduals::from_terms(out.try_into().expect("six equations")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Symmetric,
    Skew,
    Neither,
}

impl Symmetry {
    /// Classifies `r`; the zero tensor counts as symmetric.
    pub fn of(r: &Tensor2) -> Self {
        if r.is_symmetric() {
            Symmetry::Symmetric
        } else if r.is_skew() {
            Symmetry::Skew
        } else {
            Symmetry::Neither
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Equation {
    Aybe,
    Pa,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ambient {
    Alternative(AlternativeAlgebra),
    PreAlternative(PreAlternativeAlgebra),
}

impl Ambient {
    pub fn dim(&self) -> usize {
        match self {
            Ambient::Alternative(a) => a.dim(),
            Ambient::PreAlternative(p) => p.dim(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Ambient::Alternative(a) => a.field(),
            Ambient::PreAlternative(p) => p.field(),
        }
    }

    /// The alternative algebra itself, or the associated one.
    pub fn alternative(&self) -> AlternativeAlgebra {
        match self {
            Ambient::Alternative(a) => a.clone(),
            Ambient::PreAlternative(p) => associated_algebra(p),
        }
    }

    pub fn prealternative(&self) -> Result<&PreAlternativeAlgebra> {
        match self {
            Ambient::PreAlternative(p) => Ok(p),
            Ambient::Alternative(_) => Err(Error::Unsupported("PA-equations need a pre-alternative algebra".into())),
        }
    }
}

/// Whether `r` solves `eq` in `ambient`. AYBE over a pre-alternative ambient
/// is taken in its associated algebra.
pub fn solves(ambient: &Ambient, r: &Tensor2, eq: Equation) -> Result<bool> {
    match eq {
        Equation::Aybe => Ok(aybe_residual(&ambient.alternative(), r, AybeVariant::A1)?.is_zero()),
        Equation::Pa => Ok(pa_residuals(ambient.prealternative()?, r)?.all_zero()),
    }
}

/// A verified solution: construction fails unless the residuals vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionRecord {
    ambient: Ambient,
    r: Tensor2,
    symmetry: Symmetry,
    equation: Equation,
}

impl SolutionRecord {
    pub fn new(ambient: Ambient, r: Tensor2, equation: Equation) -> Result<Self> {
        if !solves(&ambient, &r, equation)? {
            return Err(Error::NotSolution);
        }
        let symmetry = Symmetry::of(&r);
        Ok(SolutionRecord { ambient, r, symmetry, equation })
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn r(&self) -> &Tensor2 {
        &self.r
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn equation(&self) -> Equation {
        self.equation
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum YbMode {
    /// Skew `r`; `T_r` against `(A*, r_∘*, l_∘*)`.
    SkewAybe,
    /// Symmetric `r`; `T_r` against `(A*, r_≺*, l_≻*)` of the associated
    /// algebra.
    SymPa,
}

fn operator_context(ambient: &Ambient, r: &Tensor2, mode: YbMode) -> Result<(AlternativeAlgebra, AltBimoduleAction)> {
    check_dims(ambient.dim(), r)?;
    match mode {
        YbMode::SkewAybe => {
            if !r.is_skew() {
                return Err(Error::WrongSymmetry("operator form of AYBE needs a skew tensor".into()));
            }
            let a = ambient.alternative();
            let act = dual_regular(&a);
            Ok((a, act))
        }
        YbMode::SymPa => {
            if !r.is_symmetric() {
                return Err(Error::WrongSymmetry("operator form of the PA-equations needs a symmetric tensor".into()));
            }
            let p = ambient.prealternative()?;
            Ok((associated_algebra(p), dual_split(p)))
        }
    }
}

/// `T_r` as an Al-operator (id `al`, witnesses are dual basis pairs).
pub fn yb_operator_check(ambient: &Ambient, r: &Tensor2, mode: YbMode) -> Result<CheckReport> {
    let (a, act) = operator_context(ambient, r, mode)?;
    check_al_operator(&a, &act, &r.to_map())
}

/// The pre-alternative structure on `A*` induced by a solution:
/// `a*≺b* = l_∘*(T_r b*)a*` (skew) or `l_≻*(T_r b*)a*` (symmetric), and
/// `a*≻b* = r_∘*(T_r a*)b*` or `r_≺*(T_r a*)b*`.
pub fn induced_dual_prealt(ambient: &Ambient, r: &Tensor2, mode: YbMode) -> Result<PreAlternativeAlgebra> {
    let (a, act) = operator_context(ambient, r, mode)?;
    match al_induce(&a, &act, &r.to_map()) {
        Err(Error::NotAlOperator) => Err(Error::NotSolution),
        other => other,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CanonicalSign {
    /// `Σ (e_i ⊗ e_i* − e_i* ⊗ e_i)` in `As(P) ⋉_{r_≺*, l_≻*} P*`.
    Minus,
    /// `Σ (e_i ⊗ e_i* + e_i* ⊗ e_i)` in `P ⋉_{0, l_≻*, r_≺*, 0} P*`.
    Plus,
}

fn doubled_identity(field: FieldSpec, n: usize, sign: i64) -> Tensor2 {
    let mut r = Tensor2::zeros(field, 2 * n);
    for i in 0..n {
        r.set(i, n + i, field.one());
        r.set(n + i, i, field.int(sign));
    }
    r
}

pub fn canonical_r(p: &PreAlternativeAlgebra, sign: CanonicalSign) -> Result<SolutionRecord> {
    if !check_prealternative(p).passed() {
        return Err(Error::NotPreAlternative);
    }
    let n = p.dim();
    let split = PreAltBimoduleAction::from_alt_action(&dual_split(p));
    match sign {
        CanonicalSign::Minus => {
            let amb = semidirect_unchecked(&associated_algebra(p), &dual_split(p))?;
            SolutionRecord::new(Ambient::Alternative(amb), doubled_identity(p.field(), n, -1), Equation::Aybe)
        }
        CanonicalSign::Plus => {
            let amb = prealt_semidirect_unchecked(p, &split)?;
            SolutionRecord::new(Ambient::PreAlternative(amb), doubled_identity(p.field(), n, 1), Equation::Pa)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorMode {
    /// `r = T − τ(T)` in `A ⋉_{R*, L*} V*`.
    Skew,
    /// `r = T + τ(T)` in `T(V) ⋉_{0, L*, R*, 0} V*`, where `T(V)` carries the
    /// image pre-alternative structure.
    Sym,
}

/// Builds a solution from an Al-operator `T: V → A` of `(V, L, R)`.
pub fn r_from_operator(
    a: &AlternativeAlgebra,
    act: &AltBimoduleAction,
    t: &Matrix,
    mode: OperatorMode,
) -> Result<SolutionRecord> {
    if !check_al_operator(a, act, t)?.passed() {
        return Err(Error::NotAlOperator);
    }
    let f = a.field();
    let m = act.module_dim();
    match mode {
        OperatorMode::Skew => {
            let n = a.dim();
            let amb = semidirect_unchecked(a, &alt_dual_bimodule(act))?;
            let mut r = Tensor2::zeros(f, n + m);
            for k in 0..n {
                for i in 0..m {
                    let c = t.get(k, i);
                    r.set(k, n + i, c.clone());
                    r.set(n + i, k, -c);
                }
            }
            SolutionRecord::new(Ambient::Alternative(amb), r, Equation::Aybe)
        }
        OperatorMode::Sym => {
            let (image, basis, coef) = image_structure(a, act, t)?;
            let k = basis.len();
            // (0, L*, R*, 0) restricted to the image
            let rp: Vec<Matrix> = basis.iter().map(|x| act.left(x).transpose()).collect();
            let ls: Vec<Matrix> = basis.iter().map(|x| act.right(x).transpose()).collect();
            let zero = vec![Matrix::zeros(f, m, m); k];
            let dual = PreAltBimoduleAction::new(f, dual_labels(act.labels()), zero.clone(), rp, ls, zero)?;
            let amb = prealt_semidirect_unchecked(&image, &dual)?;
            let mut r = Tensor2::zeros(f, k + m);
            for row in 0..k {
                for i in 0..m {
                    let c = coef.get(row, i);
                    r.set(row, k + i, c.clone());
                    r.set(k + i, row, c.clone());
                }
            }
            SolutionRecord::new(Ambient::PreAlternative(amb), r, Equation::Pa)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormClass {
    /// Skew `r`; the form should be symplectic.
    Symplectic,
    /// Symmetric `r`; the form should be a 2-cocycle.
    TwoCocycle,
}

/// The form of a nondegenerate `r` with the two verdicts that must agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correspondence {
    pub form: BilinearForm,
    pub classification: FormClass,
    /// `r` solves AYBE (skew) or the PA-equations (symmetric).
    pub solves: bool,
    /// The form is closed (skew) or a 2-cocycle (symmetric).
    pub form_passes: bool,
}

impl Correspondence {
    pub fn agree(&self) -> bool {
        self.solves == self.form_passes
    }
}

pub fn nondegenerate_correspondence(ambient: &Ambient, r: &Tensor2) -> Result<Correspondence> {
    check_dims(ambient.dim(), r)?;
    let form = match map_to_form(&r.to_map()) {
        Ok(b) => b,
        Err(Error::SingularMap) => return Err(Error::Degenerate),
        Err(e) => return Err(e),
    };
    if r.is_skew() {
        let a = ambient.alternative();
        let solves = aybe_residual(&a, r, AybeVariant::A1)?.is_zero();
        let form_passes = check_form(&a, &form, FormKind::Closed)?.passed();
        Ok(Correspondence { form, classification: FormClass::Symplectic, solves, form_passes })
    } else if r.is_symmetric() {
        let p = ambient.prealternative()?;
        let solves = pa_residuals(p, r)?.all_zero();
        let form_passes = check_2cocycle(p, &form)?.report.passed();
        Ok(Correspondence { form, classification: FormClass::TwoCocycle, solves, form_passes })
    } else {
        Err(Error::WrongSymmetry("tensor is neither symmetric nor skew".into()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphMode {
    /// Graph in `A ⋉_{r_∘*, l_∘*} A*` with the symmetric pairing.
    Alt,
    /// Graph in `P ⋉_{−r_≻*, l_∘*, r_∘*, −l_≺*} P*` with the standard
    /// symplectic form.
    PreAlt,
}

/// The symmetric pairing `⟨x, b*⟩ + ⟨a*, y⟩` on `A ⊕ A*`.
pub fn pairing_form(field: FieldSpec, n: usize) -> BilinearForm {
    BilinearForm::from_fn(field, 2 * n, |i, j| if i + n == j || j + n == i { field.one() } else { field.zero() })
}

/// The symplectic form `⟨a*, y⟩ − ⟨x, b*⟩` on `A ⊕ A*`.
pub fn standard_symplectic(field: FieldSpec, n: usize) -> BilinearForm {
    BilinearForm::from_fn(field, 2 * n, |i, j| {
        if i + n == j {
            field.int(-1)
        } else if j + n == i {
            field.one()
        } else {
            field.zero()
        }
    })
}

/// Checks `graph(T) = {(T a*, a*)}` for closure (`graph.subalgebra`),
/// isotropy (`graph.lagrangian`) and agreement with the solution property
/// of the tensor read off `T` (`graph.equivalence`).
pub fn graph_check(ambient: &Ambient, t: &Matrix, mode: GraphMode) -> Result<CheckReport> {
    let n = ambient.dim();
    if t.rows() != n || t.cols() != n {
        return Err(Error::DimensionMismatch(format!("graph map must be {n}×{n}")));
    }
    let f = ambient.field();
    let (products, form): (Vec<Product>, BilinearForm) = match mode {
        GraphMode::Alt => {
            let a = ambient.alternative();
            let d = semidirect_unchecked(&a, &dual_regular(&a))?;
            (vec![d.product().clone()], pairing_form(f, n))
        }
        GraphMode::PreAlt => {
            let p = ambient.prealternative()?;
            let d = prealt_semidirect_unchecked(p, &prealt_dual_bimodule(&p.regular_action()))?;
            (vec![d.prec().clone(), d.succ().clone()], standard_symplectic(f, n))
        }
    };
    let gens: Vec<Vector> = (0..n)
        .map(|i| {
            let mut v = t.column(i);
            v.extend(f.unit(n, i));
            v
        })
        .collect();
    let mut report = CheckReport::pass();
    for i in 0..n {
        for j in 0..n {
            let mut res = Vec::new();
            for prod in &products {
                let z = prod.mul(&gens[i], &gens[j]);
                let (za, zd) = z.split_at(n);
                res.extend(vsub(za, &t.apply(zd)));
            }
            report.record("graph.subalgebra", vec![i, j], res);
        }
    }
    for i in 0..n {
        for j in 0..n {
            report.record("graph.lagrangian", vec![i, j], vec![form.eval(&gens[i], &gens[j])]);
        }
    }
    let graph_ok = report.passed();
    let r = Tensor2::from_map(t)?;
    let solution = match mode {
        GraphMode::Alt => r.is_skew() && solves(ambient, &r, Equation::Aybe)?,
        GraphMode::PreAlt => r.is_symmetric() && solves(ambient, &r, Equation::Pa)?,
    };
    if graph_ok != solution {
        report.record("graph.equivalence", vec![], vec![f.one()]);
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchKind {
    AybeSkew,
    PaSym,
    AlOperator,
}

#[derive(Clone, Debug)]
pub enum SearchTarget<'a> {
    AybeSkew(&'a AlternativeAlgebra),
    PaSym(&'a PreAlternativeAlgebra),
    AlOperator(&'a AlternativeAlgebra, &'a AltBimoduleAction),
}

impl SearchTarget<'_> {
    pub fn kind(&self) -> SearchKind {
        match self {
            SearchTarget::AybeSkew(_) => SearchKind::AybeSkew,
            SearchTarget::PaSym(_) => SearchKind::PaSym,
            SearchTarget::AlOperator(..) => SearchKind::AlOperator,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchHit {
    Solution(Box<SolutionRecord>),
    Operator(Matrix),
}

pub const DEFAULT_SEARCH_CAP: u128 = 10_000_000;

const CHUNK: u128 = 4096;

/// Exhaustive search over a finite field. Candidates are enumerated in
/// lexicographic order of their free coefficients, the first coefficient
/// most significant:
///
/// - skew tensors: `r_ij` for `i < j`, row-major;
/// - symmetric tensors: `r_ij` for `i ≤ j`, row-major;
/// - operators: all entries of `T`, row-major.
pub fn brute_search(target: &SearchTarget<'_>, cap: u128) -> Result<Vec<SearchHit>> {
    let (field, n, m) = match target {
        SearchTarget::AybeSkew(a) => (a.field(), a.dim(), a.dim()),
        SearchTarget::PaSym(p) => (p.field(), p.dim(), p.dim()),
        SearchTarget::AlOperator(a, act) => (a.field(), a.dim(), act.module_dim()),
    };
    let elems = field.elements().ok_or_else(|| Error::Unsupported("search needs a finite field".into()))?;
    if let SearchTarget::AlOperator(a, act) = target {
        if act.algebra_dim() != a.dim() {
            return Err(Error::DimensionMismatch("action is indexed by another algebra".into()));
        }
    }
    let positions: Vec<(usize, usize)> = match target.kind() {
        SearchKind::AybeSkew => (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
        SearchKind::PaSym => (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect(),
        SearchKind::AlOperator => (0..n).flat_map(|i| (0..m).map(move |j| (i, j))).collect(),
    };
    let p = elems.len() as u128;
    let size = u32::try_from(positions.len()).ok().and_then(|k| p.checked_pow(k)).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::SearchSpaceTooLarge { size, cap });
    }
    let build = |mut index: u128| {
        let mut digits = vec![0usize; positions.len()];
        for d in digits.iter_mut().rev() {
            *d = (index % p) as usize;
            index /= p;
        }
        digits
    };
    let ambient = match target {
        SearchTarget::AybeSkew(a) => Some(Ambient::Alternative((*a).clone())),
        SearchTarget::PaSym(pa) => Some(Ambient::PreAlternative((*pa).clone())),
        SearchTarget::AlOperator(..) => None,
    };
    let test = |index: u128| -> Result<Option<SearchHit>> {
        let digits = build(index);
        match target {
            SearchTarget::AlOperator(a, act) => {
                let mut t = Matrix::zeros(field, n, m);
                for (&(i, j), &d) in positions.iter().zip(&digits) {
                    t.set(i, j, elems[d].clone());
                }
                Ok(check_al_operator(a, act, &t)?.passed().then_some(SearchHit::Operator(t)))
            }
            _ => {
                let mut r = Tensor2::zeros(field, n);
                let skew = target.kind() == SearchKind::AybeSkew;
                for (&(i, j), &d) in positions.iter().zip(&digits) {
                    let c = elems[d].clone();
                    r.set(j, i, if skew { -&c } else { c.clone() });
                    r.set(i, j, c);
                }
                let amb = ambient.as_ref().expect("tensor search has an ambient");
                let eq = if skew { Equation::Aybe } else { Equation::Pa };
                if solves(amb, &r, eq)? {
                    Ok(Some(SearchHit::Solution(Box::new(SolutionRecord::new(amb.clone(), r, eq)?))))
                } else {
                    Ok(None)
                }
            }
        }
    };
    let chunks = size.div_ceil(CHUNK);
    let found: Vec<Result<Vec<SearchHit>>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut hits = Vec::new();
            for idx in c * CHUNK..((c + 1) * CHUNK).min(size) {
                if let Some(h) = test(idx)? {
                    hits.push(h);
                }
            }
            Ok(hits)
        })
        .collect();
    let mut out = Vec::new();
    for chunk in found {
        out.extend(chunk?);
    }
    Ok(out)
}

/// Nonzero entries of a residual as violations keyed by `id`, witness
/// `[i, j, k]`, in lexicographic order.
pub fn residual_violations(id: &str, t: &Tensor3) -> Vec<Violation> {
    t.nonzero().filter_map(|(i, j, k, c)| violation(id, vec![i, j, k], vec![c.clone()])).collect()
}
