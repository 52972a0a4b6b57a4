//! Ways of producing pre-alternative structures: Al-operators, 1-cocycles,
//! graded and symplectic splittings, and Yang–Baxter solutions.
//!
//! An Al-operator for a bimodule `(V, L, R)` of `A` is a map `T: V → A` with
//! `T(u)∘T(v) = T(L(T u)v + R(T v)u)`. For the regular bimodule this is a
//! Rota–Baxter operator of weight zero; there is no separate type for those.

use crate::altalg::{alt_dual_bimodule, check_form, default_labels, AltBimoduleAction, AlternativeAlgebra, FormKind};
use crate::error::{Error, Result};
use crate::linalg::{vadd, vsub, Matrix, Vector};
use crate::prealt::PreAlternativeAlgebra;
use crate::report::{scan, violation, CheckReport};
use crate::tensor::{BilinearForm, Tensor2, Tensor3};
use crate::ybe::pa_residuals;

fn check_operator_shape(a: &AlternativeAlgebra, act: &AltBimoduleAction, t: &Matrix) -> Result<()> {
    if act.algebra_dim() != a.dim() {
        return Err(Error::DimensionMismatch("action is indexed by another algebra".into()));
    }
    if t.rows() != a.dim() || t.cols() != act.module_dim() {
        return Err(Error::DimensionMismatch(format!(
            "operator must be {}×{}, got {}×{}",
            a.dim(),
            act.module_dim(),
            t.rows(),
            t.cols()
        )));
    }
    Ok(())
}

/// `T(u)∘T(v) = T(L(T u)v + R(T v)u)` on all module basis pairs (id `al`).
pub fn check_al_operator(a: &AlternativeAlgebra, act: &AltBimoduleAction, t: &Matrix) -> Result<CheckReport> {
    check_operator_shape(a, act, t)?;
    let m = act.module_dim();
    let f = a.field();
    let cols: Vec<Vector> = (0..m).map(|i| t.column(i)).collect();
    Ok(CheckReport::from_violations(scan(m, 2, |w| {
        let (tu, tv) = (&cols[w[0]], &cols[w[1]]);
        let (u, v) = (f.unit(m, w[0]), f.unit(m, w[1]));
        let inner = vadd(&act.left(tu).apply(&v), &act.right(tv).apply(&u));
        let res = vsub(&a.mul(tu, tv), &t.apply(&inner));
        violation("al", w.to_vec(), res).into_iter().collect()
    })))
}

/// The structure on `V` given by `u≺v = R(T v)u`, `u≻v = L(T u)v`.
pub fn al_induce(a: &AlternativeAlgebra, act: &AltBimoduleAction, t: &Matrix) -> Result<PreAlternativeAlgebra> {
    if !check_al_operator(a, act, t)?.passed() {
        return Err(Error::NotAlOperator);
    }
    Ok(al_induce_unchecked(a, act, t))
}

pub(crate) fn al_induce_unchecked(
    a: &AlternativeAlgebra,
    act: &AltBimoduleAction,
    t: &Matrix,
) -> PreAlternativeAlgebra {
    let m = act.module_dim();
    let f = a.field();
    let cols: Vec<Vector> = (0..m).map(|i| t.column(i)).collect();
    let rt: Vec<Matrix> = cols.iter().map(|c| act.right(c)).collect();
    let lt: Vec<Matrix> = cols.iter().map(|c| act.left(c)).collect();
    // u_i ≺ u_j = R(T u_j) u_i: column i of R(T u_j)
    let prec = Tensor3::from_fn(f, m, |i, j, k| rt[j].get(k, i).clone());
    let succ = Tensor3::from_fn(f, m, |i, j, k| lt[i].get(k, j).clone());
    PreAlternativeAlgebra::new(f, act.labels().to_vec(), prec, succ).expect("shapes agree")
}

/// `D(x∘y) = L(x)D(y) + R(y)D(x)` on all basis pairs (id `cocycle1`).
pub fn check_1cocycle(a: &AlternativeAlgebra, act: &AltBimoduleAction, d: &Matrix) -> Result<CocycleCheck> {
    if act.algebra_dim() != a.dim() || d.rows() != act.module_dim() || d.cols() != a.dim() {
        return Err(Error::DimensionMismatch("1-cocycle must map the algebra into the module".into()));
    }
    let n = a.dim();
    let report = CheckReport::from_violations(scan(n, 2, |w| {
        let (x, y) = (a.unit(w[0]), a.unit(w[1]));
        let lhs = d.apply(&a.mul(&x, &y));
        let rhs = vadd(&act.left(&x).apply(&d.column(w[1])), &act.right(&y).apply(&d.column(w[0])));
        violation("cocycle1", w.to_vec(), vsub(&lhs, &rhs)).into_iter().collect()
    }));
    Ok(CocycleCheck { report, bijective: d.is_invertible() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleCheck {
    pub report: CheckReport,
    pub bijective: bool,
}

/// The compatible structure on `A` from an invertible Al-operator:
/// `x≺y = T(R(y)T⁻¹x)`, `x≻y = T(L(x)T⁻¹y)`.
pub fn compatible_from_al(
    a: &AlternativeAlgebra,
    act: &AltBimoduleAction,
    t: &Matrix,
) -> Result<PreAlternativeAlgebra> {
    check_operator_shape(a, act, t)?;
    let ti = t.inverse()?;
    if !check_al_operator(a, act, t)?.passed() {
        return Err(Error::NotAlOperator);
    }
    let n = a.dim();
    let f = a.field();
    let inv_cols: Vec<Vector> = (0..n).map(|i| ti.column(i)).collect();
    let mut prec = Tensor3::zeros(f, n);
    let mut succ = Tensor3::zeros(f, n);
    for i in 0..n {
        for j in 0..n {
            let p = t.apply(&act.right(&a.unit(j)).apply(&inv_cols[i]));
            let s = t.apply(&act.left(&a.unit(i)).apply(&inv_cols[j]));
            for k in 0..n {
                prec.set(i, j, k, p[k].clone());
                succ.set(i, j, k, s[k].clone());
            }
        }
    }
    PreAlternativeAlgebra::new(f, a.labels().to_vec(), prec, succ)
}

/// Positive integer degrees, one per basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grading {
    degrees: Vec<u32>,
}

impl Grading {
    pub fn new(degrees: Vec<u32>) -> Result<Self> {
        if degrees.contains(&0) {
            return Err(Error::NotGraded("degrees must be positive".into()));
        }
        Ok(Grading { degrees })
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }
}

/// For `A = ⊕ A_d` with `A_i∘A_j ⊆ A_{i+j}`:
/// `x≻y = j/(i+j)·x∘y` and `x≺y = i/(i+j)·x∘y` for `x ∈ A_i`, `y ∈ A_j`.
pub fn graded_split(a: &AlternativeAlgebra, g: &Grading) -> Result<PreAlternativeAlgebra> {
    let n = a.dim();
    let f = a.field();
    if g.degrees.len() != n {
        return Err(Error::DimensionMismatch("one degree per basis vector".into()));
    }
    let deg = &g.degrees;
    let mut prec = Tensor3::zeros(f, n);
    let mut succ = Tensor3::zeros(f, n);
    for (i, j, k, c) in a.tensor().nonzero() {
        if deg[k] != deg[i] + deg[j] {
            return Err(Error::NotGraded(format!(
                "e{}∘e{} has a component on e{} of degree {} ≠ {} + {}",
                i + 1,
                j + 1,
                k + 1,
                deg[k],
                deg[i],
                deg[j]
            )));
        }
        let total = (deg[i] + deg[j]) as i64;
        let wp = f.ratio(deg[i] as i64, total)?;
        let ws = f.ratio(deg[j] as i64, total)?;
        prec.set(i, j, k, &wp * c);
        succ.set(i, j, k, &ws * c);
    }
    PreAlternativeAlgebra::new(f, a.labels().to_vec(), prec, succ)
}

/// The compatible structure attached to a symplectic form:
/// `ω(x≺y, z) = ω(x, y∘z)` and `ω(x≻y, z) = ω(y, z∘x)`, solved as linear
/// systems in the unknown products.
pub fn symplectic_split(a: &AlternativeAlgebra, w: &BilinearForm) -> Result<PreAlternativeAlgebra> {
    let rep = match check_form(a, w, FormKind::Symplectic) {
        Ok(r) => r,
        Err(Error::NotSkew) => return Err(Error::NotSymplectic),
        Err(e) => return Err(e),
    };
    if !rep.passed() {
        return Err(Error::NotSymplectic);
    }
    let n = a.dim();
    let f = a.field();
    // ω(v, e_k) = Σ_a v_a ω[a][k], so the system matrix is ωᵀ.
    let sys = w.matrix().transpose();
    let mut prec = Tensor3::zeros(f, n);
    let mut succ = Tensor3::zeros(f, n);
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (a.unit(i), a.unit(j));
            let rhs_p: Vector = (0..n).map(|k| w.eval(&x, &a.mul(&y, &a.unit(k)))).collect();
            let rhs_s: Vector = (0..n).map(|k| w.eval(&y, &a.mul(&a.unit(k), &x))).collect();
            let p = sys.solve(&rhs_p).ok_or(Error::NotSymplectic)?;
            let s = sys.solve(&rhs_s).ok_or(Error::NotSymplectic)?;
            for k in 0..n {
                prec.set(i, j, k, p[k].clone());
                succ.set(i, j, k, s[k].clone());
            }
        }
    }
    PreAlternativeAlgebra::new(f, a.labels().to_vec(), prec, succ)
}

/// A second compatible structure on `As(P)` from a nondegenerate symmetric
/// PA solution: `x≺'y = T_r(l_≻*(y)T_r⁻¹x)`, `x≻'y = T_r(r_≺*(x)T_r⁻¹y)`.
pub fn compatible_from_pa_solution(p: &PreAlternativeAlgebra, r: &Tensor2) -> Result<PreAlternativeAlgebra> {
    if r.dim() != p.dim() {
        return Err(Error::DimensionMismatch("tensor and algebra dimensions differ".into()));
    }
    if !r.is_symmetric() {
        return Err(Error::NotSolution);
    }
    let t = r.to_map();
    let ti = t.inverse()?;
    if !pa_residuals(p, r)?.all_zero() {
        return Err(Error::NotSolution);
    }
    let n = p.dim();
    let f = p.field();
    let inv_cols: Vec<Vector> = (0..n).map(|i| ti.column(i)).collect();
    let mut prec = Tensor3::zeros(f, n);
    let mut succ = Tensor3::zeros(f, n);
    for i in 0..n {
        for j in 0..n {
            let ls = p.succ().left_basis(j).transpose();
            let rp = p.prec().right_basis(i).transpose();
            let a = t.apply(&ls.apply(&inv_cols[i]));
            let b = t.apply(&rp.apply(&inv_cols[j]));
            for k in 0..n {
                prec.set(i, j, k, a[k].clone());
                succ.set(i, j, k, b[k].clone());
            }
        }
    }
    PreAlternativeAlgebra::new(f, p.labels().to_vec(), prec, succ)
}

/// `φ: A → A*` with `⟨φ(x), y⟩ = B(x, y)`.
pub fn form_to_dual_map(b: &BilinearForm) -> Matrix {
    b.matrix().transpose()
}

/// `T̃ = T_r ∘ φ`, the operator attached to `r` through a nondegenerate form.
/// With an invariant symmetric form on an alternative algebra it is a
/// Rota–Baxter operator exactly when `r` solves the alternative Yang–Baxter
/// equation; with an associative symmetric form on a pre-alternative algebra
/// it is an Al-operator of `(A, l_≻, r_≺)` exactly when `r` solves the PA
/// equations.
pub fn operator_through_form(r: &Tensor2, b: &BilinearForm) -> Matrix {
    r.to_map().mul(&form_to_dual_map(b))
}

/// `h(x≺y, z) = h(x, y≻z)` on basis triples (id `form.assoc`).
pub fn check_associative_form(p: &PreAlternativeAlgebra, h: &BilinearForm) -> Result<CheckReport> {
    let n = p.dim();
    if h.dim() != n {
        return Err(Error::DimensionMismatch("form and algebra dimensions differ".into()));
    }
    Ok(CheckReport::from_violations(scan(n, 3, |w| {
        let (x, y, z) = (p.unit(w[0]), p.unit(w[1]), p.unit(w[2]));
        let res = h.eval(&p.prec().mul(&x, &y), &z) - h.eval(&x, &p.succ().mul(&y, &z));
        violation("form.assoc", w.to_vec(), vec![res]).into_iter().collect()
    })))
}

/// The bimodule `(A*, r_∘*, l_∘*)` dual to the regular one.
pub fn dual_regular(a: &AlternativeAlgebra) -> AltBimoduleAction {
    alt_dual_bimodule(&a.regular_action())
}

/// The bimodule `(A, l_≻, r_≺)` of the associated algebra.
pub fn split_action(p: &PreAlternativeAlgebra) -> AltBimoduleAction {
    AltBimoduleAction::new(p.field(), p.labels().to_vec(), p.succ().left_family(), p.prec().right_family())
        .expect("shapes agree")
}

/// The bimodule `(A*, r_≺*, l_≻*)`, dual to [`split_action`].
pub fn dual_split(p: &PreAlternativeAlgebra) -> AltBimoduleAction {
    alt_dual_bimodule(&split_action(p))
}

/// The image `T(V) ⊂ A` as a pre-alternative algebra,
/// `T(u)≺T(v) = T(u≺v)`, together with the basis used (as vectors of `A`)
/// and the coordinates of each `T(v_i)` in that basis.
pub fn image_structure(
    a: &AlternativeAlgebra,
    act: &AltBimoduleAction,
    t: &Matrix,
) -> Result<(PreAlternativeAlgebra, Vec<Vector>, Matrix)> {
    let induced = al_induce(a, act, t)?;
    let n = a.dim();
    let m = act.module_dim();
    let f = a.field();
    let basis = t.column_space();
    let k = basis.len();
    let bmat = Matrix::from_columns(f, n, &basis);
    let coords_of = |v: &[crate::Scalar]| bmat.solve(v).expect("vector lies in the image");
    let coef = Matrix::from_columns(f, k, &(0..m).map(|i| coords_of(&t.column(i))).collect::<Vec<_>>());
    let pre: Vec<Vector> = basis.iter().map(|w| t.solve(w).expect("image vector")).collect();
    let mut prec = Tensor3::zeros(f, k);
    let mut succ = Tensor3::zeros(f, k);
    for i in 0..k {
        for j in 0..k {
            let p = coords_of(&t.apply(&induced.prec().mul(&pre[i], &pre[j])));
            let s = coords_of(&t.apply(&induced.succ().mul(&pre[i], &pre[j])));
            for l in 0..k {
                prec.set(i, j, l, p[l].clone());
                succ.set(i, j, l, s[l].clone());
            }
        }
    }
    let alg = PreAlternativeAlgebra::new(f, default_labels("w", k), prec, succ)?;
    Ok((alg, basis, coef))
}
