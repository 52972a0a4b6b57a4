//! Alternative algebras, their bimodules, semidirect products and bilinear
//! forms.
//!
//! Alternativity is `(x, x, y) = 0 = (y, x, x)` for the associator
//! `(x, y, z) = (xy)z − x(yz)`. Over characteristic ≠ 2 this is equivalent to
//! its linearization; [`check_alternative`] evaluates both forms so either
//! route can be inspected.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{span_rank, vadd, vsub, Matrix, Vector};
use crate::report::{scan, violation, CheckReport, Violation};
use crate::tensor::{BilinearForm, Product, Tensor3};

pub fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn dual_labels(labels: &[String]) -> Vec<String> {
    labels.iter().map(|l| format!("{l}^*")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternativeAlgebra {
    field: FieldSpec,
    labels: Vec<String>,
    mult: Product,
}

impl AlternativeAlgebra {
    /// Wraps structure constants. Alternativity is not enforced here; use
    /// [`check_alternative`].
    pub fn new(field: FieldSpec, labels: Vec<String>, mult: Tensor3) -> Result<Self> {
        if labels.len() != mult.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for a {}-dimensional product",
                labels.len(),
                mult.dim()
            )));
        }
        if mult.field() != field {
            return Err(Error::DimensionMismatch("structure constants over another field".into()));
        }
        Ok(AlternativeAlgebra { field, labels, mult: Product::new(mult) })
    }

    pub fn from_tensor(mult: Tensor3) -> Self {
        let labels = default_labels("e", mult.dim());
        let field = mult.field();
        AlternativeAlgebra { field, labels, mult: Product::new(mult) }
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Self::from_tensor(Tensor3::zeros(field, dim))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch("label count".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.mult.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn product(&self) -> &Product {
        &self.mult
    }

    pub fn tensor(&self) -> &Tensor3 {
        self.mult.tensor()
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.mult.mul(x, y)
    }

    pub fn unit(&self, i: usize) -> Vector {
        self.field.unit(self.dim(), i)
    }

    pub fn associator(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        vsub(&self.mul(&self.mul(x, y), z), &self.mul(x, &self.mul(y, z)))
    }

    /// The regular bimodule `(l, r)` on the algebra itself.
    pub fn regular_action(&self) -> AltBimoduleAction {
        AltBimoduleAction {
            field: self.field,
            algebra_dim: self.dim(),
            labels: self.labels.clone(),
            left: self.mult.left_family(),
            right: self.mult.right_family(),
        }
    }

    /// Isomorphic copy along an invertible `g`: `x ∘' y = g(g⁻¹x ∘ g⁻¹y)`.
    pub fn transport(&self, g: &Matrix) -> Result<Self> {
        let gi = g.inverse()?;
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|i| gi.column(i)).collect();
        let mut t = Tensor3::zeros(self.field, n);
        for i in 0..n {
            for j in 0..n {
                let v = g.apply(&self.mul(&cols[i], &cols[j]));
                for (k, c) in v.into_iter().enumerate() {
                    t.set(i, j, k, c);
                }
            }
        }
        AlternativeAlgebra::new(self.field, self.labels.clone(), t)
    }
}

/// A representation `(L, R)` of an algebra on a module `V`: `L(e_i)` and
/// `R(e_i)` as `dim V × dim V` matrices, extended linearly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltBimoduleAction {
    field: FieldSpec,
    algebra_dim: usize,
    labels: Vec<String>,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

impl AltBimoduleAction {
    pub fn new(field: FieldSpec, labels: Vec<String>, left: Vec<Matrix>, right: Vec<Matrix>) -> Result<Self> {
        let m = labels.len();
        if left.len() != right.len() {
            return Err(Error::DimensionMismatch("L and R families differ in length".into()));
        }
        if left.iter().chain(&right).any(|a| a.rows() != m || a.cols() != m) {
            return Err(Error::DimensionMismatch(format!("action matrices must be {m}×{m}")));
        }
        Ok(AltBimoduleAction { field, algebra_dim: left.len(), labels, left, right })
    }

    pub fn zero(field: FieldSpec, algebra_dim: usize, module_dim: usize) -> Self {
        let z = Matrix::zeros(field, module_dim, module_dim);
        AltBimoduleAction {
            field,
            algebra_dim,
            labels: default_labels("v", module_dim),
            left: vec![z.clone(); algebra_dim],
            right: vec![z; algebra_dim],
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn module_dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.module_dim());
        self.labels = labels;
        self
    }

    pub fn left_family(&self) -> &[Matrix] {
        &self.left
    }

    pub fn right_family(&self) -> &[Matrix] {
        &self.right
    }

    pub fn left(&self, x: &[Scalar]) -> Matrix {
        combine(self.field, self.module_dim(), &self.left, x)
    }

    pub fn right(&self, x: &[Scalar]) -> Matrix {
        combine(self.field, self.module_dim(), &self.right, x)
    }
}

/// `Σ x_i F_i` for a family of square matrices.
pub(crate) fn combine(field: FieldSpec, m: usize, family: &[Matrix], x: &[Scalar]) -> Matrix {
    let mut out = Matrix::zeros(field, m, m);
    for (f, c) in family.iter().zip(x) {
        if !c.is_zero() {
            out = out.add(&f.scale(c));
        }
    }
    out
}

/// Points at which a quadratic identity in `x` is decided exactly:
/// `e_i` (reported as `(i, i)`) and `e_i + e_j` for `i < j`.
pub(crate) fn polarization_points(field: FieldSpec, n: usize) -> Vec<(usize, usize, Vector)> {
    let mut pts = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut v = field.unit(n, i);
            if j != i {
                v[j] = field.one();
            }
            pts.push((i, j, v));
        }
    }
    pts
}

pub fn check_alternative(a: &AlternativeAlgebra) -> CheckReport {
    let n = a.dim();
    let f = a.field();
    let pts = polarization_points(f, n);
    let mut out: Vec<Violation> = Vec::new();

    for (i, j, x) in &pts {
        for k in 0..n {
            let y = a.unit(k);
            out.extend(violation("alt.left", vec![*i, *j, k], a.associator(x, x, &y)));
        }
    }
    for (i, j, x) in &pts {
        for k in 0..n {
            let y = a.unit(k);
            out.extend(violation("alt.right", vec![k, *i, *j], a.associator(&y, x, x)));
        }
    }
    out.extend(scan(n, 3, |w| {
        let (x, y, z) = (a.unit(w[0]), a.unit(w[1]), a.unit(w[2]));
        let res = vadd(&a.associator(&x, &y, &z), &a.associator(&y, &x, &z));
        violation("alt.left.lin", w.to_vec(), res).into_iter().collect()
    }));
    out.extend(scan(n, 3, |w| {
        let (x, y, z) = (a.unit(w[0]), a.unit(w[1]), a.unit(w[2]));
        let res = vadd(&a.associator(&x, &y, &z), &a.associator(&x, &z, &y));
        violation("alt.right.lin", w.to_vec(), res).into_iter().collect()
    }));
    CheckReport::from_violations(out)
}

pub fn check_associative(a: &AlternativeAlgebra) -> CheckReport {
    let n = a.dim();
    CheckReport::from_violations(scan(n, 3, |w| {
        let res = a.associator(&a.unit(w[0]), &a.unit(w[1]), &a.unit(w[2]));
        violation("assoc", w.to_vec(), res).into_iter().collect()
    }))
}

fn check_action_shape(a: &AlternativeAlgebra, act: &AltBimoduleAction) -> Result<()> {
    if act.algebra_dim() != a.dim() || act.field() != a.field() {
        return Err(Error::DimensionMismatch(format!(
            "action is indexed by {} basis vectors, algebra has {}",
            act.algebra_dim(),
            a.dim()
        )));
    }
    Ok(())
}

fn flat(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

/// Bimodule axioms, on all basis pairs `(x, y) = (e_i, e_j)`:
///
/// * `bimod.left.sq`: `L(x∘y + y∘x) = L(x)L(y) + L(y)L(x)`
/// * `bimod.right.sq`: `R(x∘y + y∘x) = R(x)R(y) + R(y)R(x)`
/// * `bimod.rl`: `R(y)L(x) − L(x)R(y) = R(x∘y) − R(y)R(x)`
/// * `bimod.lr`: `L(y∘x) − L(y)L(x) = L(y)R(x) − R(x)L(y)`
pub fn check_alt_bimodule(a: &AlternativeAlgebra, act: &AltBimoduleAction) -> Result<CheckReport> {
    check_action_shape(a, act)?;
    if !check_alternative(a).passed() {
        return Err(Error::NotAlternative);
    }
    Ok(alt_bimodule_report(a, act))
}

pub(crate) fn alt_bimodule_report(a: &AlternativeAlgebra, act: &AltBimoduleAction) -> CheckReport {
    let n = a.dim();
    let families: [&str; 4] = ["bimod.left.sq", "bimod.right.sq", "bimod.rl", "bimod.lr"];
    let mut out = Vec::new();
    for (fi, id) in families.iter().enumerate() {
        out.extend(scan(n, 2, |w| {
            let (x, y) = (a.unit(w[0]), a.unit(w[1]));
            let (lx, ly, rx, ry) = (act.left(&x), act.left(&y), act.right(&x), act.right(&y));
            let res = match fi {
                0 => {
                    let s = vadd(&a.mul(&x, &y), &a.mul(&y, &x));
                    act.left(&s).sub(&lx.mul(&ly)).sub(&ly.mul(&lx))
                }
                1 => {
                    let s = vadd(&a.mul(&x, &y), &a.mul(&y, &x));
                    act.right(&s).sub(&rx.mul(&ry)).sub(&ry.mul(&rx))
                }
                2 => ry.mul(&lx).sub(&lx.mul(&ry)).sub(&act.right(&a.mul(&x, &y))).add(&ry.mul(&rx)),
                _ => act.left(&a.mul(&y, &x)).sub(&ly.mul(&lx)).sub(&ly.mul(&rx)).add(&rx.mul(&ly)),
            };
            violation(id, w.to_vec(), flat(&res)).into_iter().collect()
        }));
    }
    CheckReport::from_violations(out)
}

/// `A ⊕ V` with `(x + u)(y + v) = x∘y + L(x)v + R(y)u`, without checking
/// the bimodule axioms.
pub fn semidirect_unchecked(a: &AlternativeAlgebra, act: &AltBimoduleAction) -> Result<AlternativeAlgebra> {
    check_action_shape(a, act)?;
    let n = a.dim();
    let m = act.module_dim();
    let f = a.field();
    let mut t = Tensor3::zeros(f, n + m);
    for (i, j, k, c) in a.tensor().nonzero() {
        t.set(i, j, k, c.clone());
    }
    for i in 0..n {
        let (l, r) = (&act.left[i], &act.right[i]);
        for b in 0..m {
            for c in 0..m {
                // e_i · v_b = Σ_c L(e_i)[c][b] v_c
                t.set(i, n + b, n + c, l.get(c, b).clone());
                // v_b · e_i = Σ_c R(e_i)[c][b] v_c
                t.set(n + b, i, n + c, r.get(c, b).clone());
            }
        }
    }
    let mut labels = a.labels().to_vec();
    labels.extend(act.labels().iter().cloned());
    AlternativeAlgebra::new(f, labels, t)
}

pub fn alt_semidirect(a: &AlternativeAlgebra, act: &AltBimoduleAction) -> Result<AlternativeAlgebra> {
    if !check_alt_bimodule(a, act)?.passed() {
        return Err(Error::BadBimodule);
    }
    semidirect_unchecked(a, act)
}

/// The dual bimodule `(R*, L*)` on `V*`.
pub fn alt_dual_bimodule(act: &AltBimoduleAction) -> AltBimoduleAction {
    AltBimoduleAction {
        field: act.field,
        algebra_dim: act.algebra_dim,
        labels: dual_labels(&act.labels),
        left: crate::tensor::dual_action(&act.right),
        right: crate::tensor::dual_action(&act.left),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    /// `B(x∘y, z) = B(x, y∘z)`
    Invariant,
    /// `ω(x∘y, z) + ω(y∘z, x) + ω(z∘x, y) = 0` for skew `ω`
    Closed,
    /// closed and nondegenerate
    Symplectic,
}

/// Checks a form against a product given by its structure constants.
pub fn check_form_on(product: &Product, b: &BilinearForm, kind: FormKind) -> Result<CheckReport> {
    let n = product.dim();
    if b.dim() != n {
        return Err(Error::DimensionMismatch("form and algebra dimensions differ".into()));
    }
    let f = product.field();
    let u = |i: usize| f.unit(n, i);
    match kind {
        FormKind::Invariant => Ok(CheckReport::from_violations(scan(n, 3, |w| {
            let (x, y, z) = (u(w[0]), u(w[1]), u(w[2]));
            let res = b.eval(&product.mul(&x, &y), &z) - b.eval(&x, &product.mul(&y, &z));
            violation("form.invariant", w.to_vec(), vec![res]).into_iter().collect()
        }))),
        FormKind::Closed | FormKind::Symplectic => {
            if !b.is_skew() {
                return Err(Error::NotSkew);
            }
            let mut rep = CheckReport::from_violations(scan(n, 3, |w| {
                let (x, y, z) = (u(w[0]), u(w[1]), u(w[2]));
                let res = b.eval(&product.mul(&x, &y), &z)
                    + b.eval(&product.mul(&y, &z), &x)
                    + b.eval(&product.mul(&z, &x), &y);
                violation("form.closed", w.to_vec(), vec![res]).into_iter().collect()
            }));
            if kind == FormKind::Symplectic {
                if let Some(k) = b.matrix().nullspace().into_iter().next() {
                    rep.record("form.nondegenerate", vec![], k);
                }
            }
            Ok(rep)
        }
    }
}

pub fn check_form(a: &AlternativeAlgebra, b: &BilinearForm, kind: FormKind) -> Result<CheckReport> {
    check_form_on(a.product(), b, kind)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagrangianReport {
    pub isotropic: bool,
    pub lagrangian: bool,
    /// Whether the subspace is closed under the product, when one was given.
    pub subalgebra: Option<bool>,
}

/// Whether `span(basis)` is closed under `product`.
pub fn closed_under(product: &Product, basis: &[Vector]) -> bool {
    let n = product.dim();
    let f = product.field();
    let r = span_rank(f, n, basis);
    basis.iter().all(|x| {
        basis.iter().all(|y| {
            let mut vs = basis.to_vec();
            vs.push(product.mul(x, y));
            span_rank(f, n, &vs) == r
        })
    })
}

pub fn subspace_lagrangian(b: &BilinearForm, w: &[Vector], algebra: Option<&Product>) -> Result<LagrangianReport> {
    let c = crate::tensor::orth_complement(b, w)?;
    Ok(LagrangianReport {
        isotropic: c.isotropic,
        lagrangian: c.lagrangian,
        subalgebra: algebra.map(|p| closed_under(p, w)),
    })
}

/// Checks `f(x∘y) = f(x)∘f(y)` on basis pairs for a product-level map.
pub(crate) fn hom_report(id: &str, f: &Matrix, src: &Product, dst: &Product) -> Result<CheckReport> {
    if f.cols() != src.dim() || f.rows() != dst.dim() {
        return Err(Error::DimensionMismatch(format!(
            "map is {}×{}, algebras have dimensions {} and {}",
            f.rows(),
            f.cols(),
            src.dim(),
            dst.dim()
        )));
    }
    let n = src.dim();
    let fd = src.field();
    let cols: Vec<Vector> = (0..n).map(|i| f.column(i)).collect();
    Ok(CheckReport::from_violations(scan(n, 2, |w| {
        let lhs = f.apply(&src.mul(&fd.unit(n, w[0]), &fd.unit(n, w[1])));
        let rhs = dst.mul(&cols[w[0]], &cols[w[1]]);
        violation(id, w.to_vec(), vsub(&lhs, &rhs)).into_iter().collect()
    })))
}

/// Homomorphism check; bijectivity is reported by [`Matrix::is_invertible`].
pub fn alt_hom_check(f: &Matrix, a: &AlternativeAlgebra, b: &AlternativeAlgebra) -> Result<CheckReport> {
    hom_report("hom", f, a.product(), b.product())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n2(f: FieldSpec) -> AlternativeAlgebra {
        AlternativeAlgebra::from_tensor(Tensor3::from_entries(f, 2, [(0, 0, 1, f.one())]).unwrap())
    }

    #[test]
    fn zero_algebra_is_alternative() {
        let a = AlternativeAlgebra::zero(FieldSpec::Rationals, 3);
        assert!(check_alternative(&a).passed());
        assert!(check_associative(&a).passed());
    }

    #[test]
    fn non_alternative_fails_with_witness() {
        let f = FieldSpec::Rationals;
        // e1 e1 = e2, e1 e2 = e1: (e1, e1, e1) = e2 e1 - e1 e1... = 0 - e2
        let t = Tensor3::from_entries(f, 2, [(0, 0, 1, f.one()), (0, 1, 0, f.one())]).unwrap();
        let a = AlternativeAlgebra::from_tensor(t);
        let rep = check_alternative(&a);
        assert!(!rep.passed());
        assert!(rep.fails("alt.left"));
    }

    #[test]
    fn regular_bimodule_semidirect() {
        let f = FieldSpec::Rationals;
        let a = n2(f);
        let reg = a.regular_action();
        assert!(check_alt_bimodule(&a, &reg).unwrap().passed());
        let s = alt_semidirect(&a, &reg).unwrap();
        assert_eq!(s.dim(), 4);
        assert!(check_alternative(&s).passed());
        let dual = alt_dual_bimodule(&reg);
        assert_eq!(dual.labels()[0], "e1^*");
        assert!(check_alt_bimodule(&a, &dual).unwrap().passed());
    }

    #[test]
    fn closedness_needs_skew_form() {
        let f = FieldSpec::Rationals;
        let a = n2(f);
        let b = BilinearForm::from_fn(f, 2, |i, j| if i == j { f.one() } else { f.zero() });
        assert_eq!(check_form(&a, &b, FormKind::Closed), Err(Error::NotSkew));
    }
}
