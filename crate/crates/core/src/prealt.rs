//! Pre-alternative algebras: two products `≺`, `≻` whose sum `∘` is
//! alternative, together with their bimodules and 2-cocycles.
//!
//! With the associators
//!
//! ```text
//! (x,y,z)_r = (x≺y)≺z − x≺(y∘z)
//! (x,y,z)_m = (x≻y)≺z − x≻(y≺z)
//! (x,y,z)_l = (x∘y)≻z − x≻(y≻z)
//! ```
//!
//! the axioms are `(x,y,z)_m + (y,x,z)_r = 0`, `(x,y,z)_m + (x,z,y)_l = 0`
//! and `(y,x,x)_r = 0 = (x,x,y)_l`.

use crate::altalg::{
    check_alternative, combine, default_labels, dual_labels, hom_report, polarization_points, AltBimoduleAction,
    AlternativeAlgebra, FormKind,
};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{vadd, vsub, Matrix, Vector};
use crate::report::{scan, violation, CheckReport, Violation};
use crate::tensor::{dual_action, BilinearForm, Product, Tensor3};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreAlternativeAlgebra {
    field: FieldSpec,
    labels: Vec<String>,
    prec: Product,
    succ: Product,
    circ: Product,
}

impl PreAlternativeAlgebra {
    /// Wraps structure constants; the axioms are checked separately by
    /// [`check_prealternative`].
    pub fn new(field: FieldSpec, labels: Vec<String>, prec: Tensor3, succ: Tensor3) -> Result<Self> {
        if prec.dim() != succ.dim() || labels.len() != prec.dim() {
            return Err(Error::DimensionMismatch(format!(
                "≺ has dimension {}, ≻ has {}, {} labels",
                prec.dim(),
                succ.dim(),
                labels.len()
            )));
        }
        if prec.field() != field || succ.field() != field {
            return Err(Error::DimensionMismatch("structure constants over another field".into()));
        }
        let circ = Product::new(prec.add(&succ));
        Ok(PreAlternativeAlgebra { field, labels, prec: Product::new(prec), succ: Product::new(succ), circ })
    }

    pub fn from_tensors(prec: Tensor3, succ: Tensor3) -> Result<Self> {
        let field = prec.field();
        Self::new(field, default_labels("e", prec.dim()), prec, succ)
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Self::from_tensors(Tensor3::zeros(field, dim), Tensor3::zeros(field, dim)).expect("shapes agree")
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
        self.prec.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn prec(&self) -> &Product {
        &self.prec
    }

    pub fn succ(&self) -> &Product {
        &self.succ
    }

    pub fn circ(&self) -> &Product {
        &self.circ
    }

    pub fn unit(&self, i: usize) -> Vector {
        self.field.unit(self.dim(), i)
    }

    pub fn assoc_r(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        let p = &self.prec;
        vsub(&p.mul(&p.mul(x, y), z), &p.mul(x, &self.circ.mul(y, z)))
    }

    pub fn assoc_m(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        vsub(&self.prec.mul(&self.succ.mul(x, y), z), &self.succ.mul(x, &self.prec.mul(y, z)))
    }

    pub fn assoc_l(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        let s = &self.succ;
        vsub(&s.mul(&self.circ.mul(x, y), z), &s.mul(x, &s.mul(y, z)))
    }

    /// The action `(l_≺, r_≺, l_≻, r_≻)` on the algebra itself.
    pub fn regular_action(&self) -> PreAltBimoduleAction {
        PreAltBimoduleAction {
            field: self.field,
            algebra_dim: self.dim(),
            labels: self.labels.clone(),
            lp: self.prec.left_family(),
            rp: self.prec.right_family(),
            ls: self.succ.left_family(),
            rs: self.succ.right_family(),
        }
    }

    /// Isomorphic copy along an invertible `g`.
    pub fn transport(&self, g: &Matrix) -> Result<Self> {
        let gi = g.inverse()?;
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|i| gi.column(i)).collect();
        let move_product = |p: &Product| {
            let mut t = Tensor3::zeros(self.field, n);
            for i in 0..n {
                for j in 0..n {
                    for (k, c) in g.apply(&p.mul(&cols[i], &cols[j])).into_iter().enumerate() {
                        t.set(i, j, k, c);
                    }
                }
            }
            t
        };
        Self::new(self.field, self.labels.clone(), move_product(&self.prec), move_product(&self.succ))
    }
}

/// The alternative algebra `(A, ∘)` with `x∘y = x≺y + x≻y`.
pub fn associated_algebra(p: &PreAlternativeAlgebra) -> AlternativeAlgebra {
    AlternativeAlgebra::new(p.field, p.labels.clone(), p.circ.tensor().clone()).expect("same shape")
}

pub fn check_prealternative(p: &PreAlternativeAlgebra) -> CheckReport {
    let n = p.dim();
    let u = |i: usize| p.unit(i);
    let mut out: Vec<Violation> = Vec::new();
    out.extend(scan(n, 3, |w| {
        let (x, y, z) = (u(w[0]), u(w[1]), u(w[2]));
        let res = vadd(&p.assoc_m(&x, &y, &z), &p.assoc_r(&y, &x, &z));
        violation("pa.mr", w.to_vec(), res).into_iter().collect()
    }));
    out.extend(scan(n, 3, |w| {
        let (x, y, z) = (u(w[0]), u(w[1]), u(w[2]));
        let res = vadd(&p.assoc_m(&x, &y, &z), &p.assoc_l(&x, &z, &y));
        violation("pa.ml", w.to_vec(), res).into_iter().collect()
    }));
    out.extend(scan(n, 3, |w| {
        let (x, y, z) = (u(w[0]), u(w[1]), u(w[2]));
        let res = vadd(&p.assoc_l(&x, &y, &z), &p.assoc_l(&y, &x, &z));
        violation("pa.l.sym", w.to_vec(), res).into_iter().collect()
    }));
    out.extend(scan(n, 3, |w| {
        let (x, y, z) = (u(w[0]), u(w[1]), u(w[2]));
        let res = vadd(&p.assoc_r(&x, &y, &z), &p.assoc_r(&x, &z, &y));
        violation("pa.r.sym", w.to_vec(), res).into_iter().collect()
    }));
    let pts = polarization_points(p.field, n);
    for (i, j, x) in &pts {
        for k in 0..n {
            out.extend(violation("pa.r.quad", vec![k, *i, *j], p.assoc_r(&u(k), x, x)));
        }
    }
    for (i, j, x) in &pts {
        for k in 0..n {
            out.extend(violation("pa.l.quad", vec![*i, *j, k], p.assoc_l(x, x, &u(k))));
        }
    }
    CheckReport::from_violations(out)
}

/// Checks the three zero-associator identities of a dendriform dialgebra:
/// `(x≺y)≺z = x≺(y∘z)`, `(x≻y)≺z = x≻(y≺z)`, `(x∘y)≻z = x≻(y≻z)`.
pub fn check_dendriform(p: &PreAlternativeAlgebra) -> CheckReport {
    let n = p.dim();
    let mut out = Vec::new();
    for (id, which) in [("dend.r", 0), ("dend.m", 1), ("dend.l", 2)] {
        out.extend(scan(n, 3, |w| {
            let (x, y, z) = (p.unit(w[0]), p.unit(w[1]), p.unit(w[2]));
            let res = match which {
                0 => p.assoc_r(&x, &y, &z),
                1 => p.assoc_m(&x, &y, &z),
                _ => p.assoc_l(&x, &y, &z),
            };
            violation(id, w.to_vec(), res).into_iter().collect()
        }));
    }
    CheckReport::from_violations(out)
}

/// Four actions `(L_≺, R_≺, L_≻, R_≻)` of a pre-alternative algebra on `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreAltBimoduleAction {
    field: FieldSpec,
    algebra_dim: usize,
    labels: Vec<String>,
    lp: Vec<Matrix>,
    rp: Vec<Matrix>,
    ls: Vec<Matrix>,
    rs: Vec<Matrix>,
}

impl PreAltBimoduleAction {
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        lp: Vec<Matrix>,
        rp: Vec<Matrix>,
        ls: Vec<Matrix>,
        rs: Vec<Matrix>,
    ) -> Result<Self> {
        let n = lp.len();
        let m = labels.len();
        if rp.len() != n || ls.len() != n || rs.len() != n {
            return Err(Error::DimensionMismatch("action families differ in length".into()));
        }
        if lp.iter().chain(&rp).chain(&ls).chain(&rs).any(|a| a.rows() != m || a.cols() != m) {
            return Err(Error::DimensionMismatch(format!("action matrices must be {m}×{m}")));
        }
        Ok(PreAltBimoduleAction { field, algebra_dim: n, labels, lp, rp, ls, rs })
    }

    pub fn zero(field: FieldSpec, algebra_dim: usize, module_dim: usize) -> Self {
        let z = vec![Matrix::zeros(field, module_dim, module_dim); algebra_dim];
        PreAltBimoduleAction {
            field,
            algebra_dim,
            labels: default_labels("v", module_dim),
            lp: z.clone(),
            rp: z.clone(),
            ls: z.clone(),
            rs: z,
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

    /// Families in the order `(L_≺, R_≺, L_≻, R_≻)`.
    pub fn families(&self) -> [&[Matrix]; 4] {
        [&self.lp, &self.rp, &self.ls, &self.rs]
    }

    fn comb(&self, fam: &[Matrix], x: &[Scalar]) -> Matrix {
        combine(self.field, self.module_dim(), fam, x)
    }

    pub fn lp(&self, x: &[Scalar]) -> Matrix {
        self.comb(&self.lp, x)
    }

    pub fn rp(&self, x: &[Scalar]) -> Matrix {
        self.comb(&self.rp, x)
    }

    pub fn ls(&self, x: &[Scalar]) -> Matrix {
        self.comb(&self.ls, x)
    }

    pub fn rs(&self, x: &[Scalar]) -> Matrix {
        self.comb(&self.rs, x)
    }

    pub fn lc(&self, x: &[Scalar]) -> Matrix {
        self.lp(x).add(&self.ls(x))
    }

    pub fn rc(&self, x: &[Scalar]) -> Matrix {
        self.rp(x).add(&self.rs(x))
    }

    fn sum_family(a: &[Matrix], b: &[Matrix]) -> Vec<Matrix> {
        a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
    }

    /// `(L_∘, R_∘)`, a bimodule of the associated algebra.
    pub fn circ_action(&self) -> AltBimoduleAction {
        AltBimoduleAction::new(
            self.field,
            self.labels.clone(),
            Self::sum_family(&self.lp, &self.ls),
            Self::sum_family(&self.rp, &self.rs),
        )
        .expect("shapes agree")
    }

    /// `(L_≻, R_≺)`, also a bimodule of the associated algebra.
    pub fn split_action(&self) -> AltBimoduleAction {
        AltBimoduleAction::new(self.field, self.labels.clone(), self.ls.clone(), self.rp.clone()).expect("shapes agree")
    }

    /// `(0, R, L, 0)` built from a bimodule `(L, R)` of the associated algebra.
    pub fn from_alt_action(act: &AltBimoduleAction) -> Self {
        let m = act.module_dim();
        let z = vec![Matrix::zeros(act.field(), m, m); act.algebra_dim()];
        PreAltBimoduleAction {
            field: act.field(),
            algebra_dim: act.algebra_dim(),
            labels: act.labels().to_vec(),
            lp: z.clone(),
            rp: act.right_family().to_vec(),
            ls: act.left_family().to_vec(),
            rs: z,
        }
    }
}

fn check_action_shape(p: &PreAlternativeAlgebra, act: &PreAltBimoduleAction) -> Result<()> {
    if act.algebra_dim != p.dim() || act.field != p.field {
        return Err(Error::DimensionMismatch(format!(
            "action is indexed by {} basis vectors, algebra has {}",
            act.algebra_dim,
            p.dim()
        )));
    }
    Ok(())
}

/// The ten bimodule identities `pb.1`..`pb.10` on all basis pairs.
pub fn check_prealt_bimodule(p: &PreAlternativeAlgebra, act: &PreAltBimoduleAction) -> Result<CheckReport> {
    check_action_shape(p, act)?;
    if !check_prealternative(p).passed() {
        return Err(Error::NotPreAlternative);
    }
    Ok(prealt_bimodule_report(p, act))
}

pub(crate) fn prealt_bimodule_report(p: &PreAlternativeAlgebra, act: &PreAltBimoduleAction) -> CheckReport {
    let n = p.dim();
    let mut out = Vec::new();
    for id in 1..=10 {
        let name = format!("pb.{id}");
        out.extend(scan(n, 2, |w| {
            let (x, y) = (p.unit(w[0]), p.unit(w[1]));
            let xy_c = p.circ.mul(&x, &y);
            let yx_c = p.circ.mul(&y, &x);
            let res = match id {
                1 => act.ls(&vadd(&xy_c, &yx_c)).sub(&act.ls(&x).mul(&act.ls(&y))).sub(&act.ls(&y).mul(&act.ls(&x))),
                2 => act
                    .rs(&y)
                    .mul(&act.lc(&x).add(&act.rc(&x)))
                    .sub(&act.ls(&x).mul(&act.rs(&y)))
                    .sub(&act.rs(&p.succ.mul(&x, &y))),
                3 => act
                    .rp(&y)
                    .mul(&act.ls(&x))
                    .add(&act.rp(&y).mul(&act.rp(&x)))
                    .sub(&act.ls(&x).mul(&act.rp(&y)))
                    .sub(&act.rp(&xy_c)),
                4 => act
                    .rp(&y)
                    .mul(&act.rs(&x))
                    .add(&act.rp(&y).mul(&act.lp(&x)))
                    .sub(&act.rs(&p.prec.mul(&x, &y)))
                    .sub(&act.lp(&x).mul(&act.rc(&y))),
                5 => act
                    .lp(&p.succ.mul(&x, &y))
                    .add(&act.lp(&p.prec.mul(&y, &x)))
                    .sub(&act.ls(&x).mul(&act.lp(&y)))
                    .sub(&act.lp(&y).mul(&act.lc(&x))),
                6 => act
                    .ls(&yx_c)
                    .add(&act.rp(&x).mul(&act.ls(&y)))
                    .sub(&act.ls(&y).mul(&act.ls(&x)))
                    .sub(&act.ls(&y).mul(&act.rp(&x))),
                7 => act
                    .rs(&y)
                    .mul(&act.rc(&x))
                    .add(&act.rp(&x).mul(&act.rs(&y)))
                    .sub(&act.rs(&p.succ.mul(&x, &y)))
                    .sub(&act.rs(&p.prec.mul(&y, &x))),
                8 => act
                    .rs(&x)
                    .mul(&act.lc(&y))
                    .add(&act.lp(&p.succ.mul(&y, &x)))
                    .sub(&act.ls(&y).mul(&act.rs(&x)))
                    .sub(&act.ls(&y).mul(&act.lp(&x))),
                9 => act.rp(&y).mul(&act.rp(&x)).add(&act.rp(&x).mul(&act.rp(&y))).sub(&act.rp(&vadd(&xy_c, &yx_c))),
                _ => act
                    .rp(&y)
                    .mul(&act.lp(&x))
                    .add(&act.lp(&p.prec.mul(&x, &y)))
                    .sub(&act.lp(&x).mul(&act.rc(&y).add(&act.lc(&y)))),
            };
            violation(&name, w.to_vec(), res.entries().to_vec()).into_iter().collect()
        }));
    }
    CheckReport::from_violations(out)
}

/// `A ⊕ V` with `(x+a)≺(y+b) = x≺y + L_≺(x)b + R_≺(y)a` and likewise for
/// `≻`, without checking the bimodule identities.
pub fn prealt_semidirect_unchecked(
    p: &PreAlternativeAlgebra,
    act: &PreAltBimoduleAction,
) -> Result<PreAlternativeAlgebra> {
    check_action_shape(p, act)?;
    let n = p.dim();
    let m = act.module_dim();
    let build = |base: &Product, l: &[Matrix], r: &[Matrix]| {
        let mut t = Tensor3::zeros(p.field, n + m);
        for (i, j, k, c) in base.tensor().nonzero() {
            t.set(i, j, k, c.clone());
        }
        for i in 0..n {
            for b in 0..m {
                for c in 0..m {
                    t.set(i, n + b, n + c, l[i].get(c, b).clone());
                    t.set(n + b, i, n + c, r[i].get(c, b).clone());
                }
            }
        }
        t
    };
    let mut labels = p.labels.clone();
    labels.extend(act.labels.iter().cloned());
    PreAlternativeAlgebra::new(p.field, labels, build(&p.prec, &act.lp, &act.rp), build(&p.succ, &act.ls, &act.rs))
}

pub fn prealt_semidirect(p: &PreAlternativeAlgebra, act: &PreAltBimoduleAction) -> Result<PreAlternativeAlgebra> {
    if !check_prealt_bimodule(p, act)?.passed() {
        return Err(Error::BadBimodule);
    }
    prealt_semidirect_unchecked(p, act)
}

/// `(V*, −R_≻*, L_∘*, R_∘*, −L_≺*)`.
pub fn prealt_dual_bimodule(act: &PreAltBimoduleAction) -> PreAltBimoduleAction {
    let neg = |f: &[Matrix]| dual_action(f).iter().map(Matrix::neg).collect::<Vec<_>>();
    PreAltBimoduleAction {
        field: act.field,
        algebra_dim: act.algebra_dim,
        labels: dual_labels(&act.labels),
        lp: neg(&act.rs),
        rp: dual_action(&PreAltBimoduleAction::sum_family(&act.lp, &act.ls)),
        ls: dual_action(&PreAltBimoduleAction::sum_family(&act.rp, &act.rs)),
        rs: neg(&act.lp),
    }
}

/// The six standard bimodules of a pre-alternative algebra on itself or its
/// dual, by name:
///
/// | name | `(L_≺, R_≺, L_≻, R_≻)` |
/// |---|---|
/// | `regular` | `(l_≺, r_≺, l_≻, r_≻)` |
/// | `split` | `(0, r_≺, l_≻, 0)` |
/// | `circ` | `(0, r_∘, l_∘, 0)` |
/// | `dual-circ` | `(0, l_∘*, r_∘*, 0)` |
/// | `dual-split` | `(0, l_≻*, r_≺*, 0)` |
/// | `dual-regular` | `(−r_≻*, l_∘*, r_∘*, −l_≺*)` |
pub fn standard_actions(p: &PreAlternativeAlgebra) -> Vec<(&'static str, PreAltBimoduleAction)> {
    let reg = p.regular_action();
    let circ = associated_algebra(p).regular_action();
    let split = AltBimoduleAction::new(p.field, p.labels.clone(), p.succ.left_family(), p.prec.right_family())
        .expect("shapes agree");
    vec![
        ("regular", reg.clone()),
        ("split", PreAltBimoduleAction::from_alt_action(&split)),
        ("circ", PreAltBimoduleAction::from_alt_action(&circ)),
        ("dual-circ", PreAltBimoduleAction::from_alt_action(&crate::altalg::alt_dual_bimodule(&circ))),
        ("dual-split", PreAltBimoduleAction::from_alt_action(&crate::altalg::alt_dual_bimodule(&split))),
        ("dual-regular", prealt_dual_bimodule(&reg)),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleReport {
    /// `B(x∘y, z) = B(x, y≻z) + B(y, z≺x)` on all basis triples.
    pub report: CheckReport,
    /// Whether `ω(x, y) = B(x, y) − B(y, x)` is closed on the associated
    /// algebra.
    pub antisymmetrization_closed: bool,
}

pub fn check_2cocycle(p: &PreAlternativeAlgebra, b: &BilinearForm) -> Result<CocycleReport> {
    let n = p.dim();
    if b.dim() != n {
        return Err(Error::DimensionMismatch("form and algebra dimensions differ".into()));
    }
    let report = CheckReport::from_violations(scan(n, 3, |w| {
        let (x, y, z) = (p.unit(w[0]), p.unit(w[1]), p.unit(w[2]));
        let res = b.eval(&p.circ.mul(&x, &y), &z) - b.eval(&x, &p.succ.mul(&y, &z)) - b.eval(&y, &p.prec.mul(&z, &x));
        violation("cocycle2", w.to_vec(), vec![res]).into_iter().collect()
    }));
    let closed = crate::altalg::check_form_on(&p.circ, &b.antisymmetrize(), FormKind::Closed)?.passed();
    Ok(CocycleReport { report, antisymmetrization_closed: closed })
}

/// `f` preserves both products on all basis pairs.
pub fn prealt_hom_check(f: &Matrix, p: &PreAlternativeAlgebra, q: &PreAlternativeAlgebra) -> Result<CheckReport> {
    let a = hom_report("hom.prec", f, &p.prec, &q.prec)?;
    let b = hom_report("hom.succ", f, &p.succ, &q.succ)?;
    Ok(a.merge(b))
}

/// Convenience: whether the associated algebra is alternative.
pub fn associated_is_alternative(p: &PreAlternativeAlgebra) -> bool {
    check_alternative(&associated_algebra(p)).passed()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2() -> PreAlternativeAlgebra {
        let f = FieldSpec::Rationals;
        let h = f.ratio(1, 2).unwrap();
        let t = Tensor3::from_entries(f, 2, [(0, 0, 1, h)]).unwrap();
        PreAlternativeAlgebra::from_tensors(t.clone(), t).unwrap()
    }

    #[test]
    fn p2_is_prealternative_with_associated_n2() {
        let p = p2();
        assert!(check_prealternative(&p).passed());
        let a = associated_algebra(&p);
        assert_eq!(a.tensor().get(0, 0, 1), &FieldSpec::Rationals.one());
    }

    #[test]
    fn halved_idempotent_fails_right_symmetry() {
        let f = FieldSpec::Rationals;
        let h = f.ratio(1, 2).unwrap();
        let t = Tensor3::from_entries(f, 1, [(0, 0, 0, h)]).unwrap();
        let p = PreAlternativeAlgebra::from_tensors(t.clone(), t).unwrap();
        let e = p.unit(0);
        assert_eq!(p.assoc_r(&e, &e, &e), vec![f.ratio(-1, 4).unwrap()]);
        let rep = check_prealternative(&p);
        assert!(rep.fails("pa.r.sym"));
        let v = rep.of("pa.r.sym").next().unwrap();
        assert_eq!(v.witness, vec![0, 0, 0]);
        assert_eq!(v.residual, vec![f.ratio(-1, 2).unwrap()]);
    }

    #[test]
    fn standard_actions_of_p2_are_bimodules() {
        let p = p2();
        for (name, act) in standard_actions(&p) {
            let rep = check_prealt_bimodule(&p, &act).unwrap();
            assert!(rep.passed(), "{name}: {:?}", rep.violations());
            let s = prealt_semidirect(&p, &act).unwrap();
            assert!(check_prealternative(&s).passed(), "{name}");
        }
    }

    #[test]
    fn zero_form_is_a_cocycle() {
        let p = p2();
        let b = BilinearForm::zeros(p.field(), 2);
        let r = check_2cocycle(&p, &b).unwrap();
        assert!(r.report.passed() && r.antisymmetrization_closed);
    }
}
