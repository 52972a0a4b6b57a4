//! Rank-2 and rank-3 tensors, bilinear products and bilinear forms.
//!
//! Storage is dense (`dim ≤ 16` covers every construction in this crate);
//! multiplication tables additionally keep a sparse index of nonzero
//! structure constants so products of sparse vectors stay cheap.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{is_zero_vec, Matrix, Vector};

/// `a[i][j]`, the coefficients of `Σ a_ij e_i ⊗ e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor2 {
    field: FieldSpec,
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl Tensor2 {
    pub fn zeros(field: FieldSpec, dim: usize) -> Self {
        Tensor2 { field, dim, coeffs: vec![field.zero(); dim * dim] }
    }

    pub fn from_fn(field: FieldSpec, dim: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut t = Self::zeros(field, dim);
        for i in 0..dim {
            for j in 0..dim {
                t.coeffs[i * dim + j] = f(i, j);
            }
        }
        t
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.coeffs[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.coeffs[i * self.dim + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Scalar) {
        self.coeffs[i * self.dim + j] += v;
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coeffs)
    }

    /// The leg swap `τ(a ⊗ b) = b ⊗ a`.
    pub fn flip(&self) -> Tensor2 {
        Tensor2::from_fn(self.field, self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.flip()
    }

    pub fn is_skew(&self) -> bool {
        self.add(&self.flip()).is_zero()
    }

    pub fn add(&self, o: &Tensor2) -> Tensor2 {
        self.zip(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &Tensor2) -> Tensor2 {
        self.zip(o, |a, b| a - b)
    }

    pub fn neg(&self) -> Tensor2 {
        Tensor2 { field: self.field, dim: self.dim, coeffs: self.coeffs.iter().map(|x| -x).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Tensor2 {
        Tensor2 { field: self.field, dim: self.dim, coeffs: self.coeffs.iter().map(|x| c * x).collect() }
    }

    fn zip(&self, o: &Tensor2, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Tensor2 {
        assert_eq!(self.dim, o.dim, "tensor dimension mismatch");
        Tensor2 {
            field: self.field,
            dim: self.dim,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    /// The map `T_r: V* → V` with `⟨u*, T_r(v*)⟩ = ⟨u* ⊗ v*, r⟩`. Its matrix
    /// is the coefficient array itself: column `l` is `Σ_k a_kl e_k`.
    pub fn to_map(&self) -> Matrix {
        Matrix::from_fn(self.field, self.dim, self.dim, |k, l| self.get(k, l).clone())
    }

    /// Inverse of [`Tensor2::to_map`].
    pub fn from_map(m: &Matrix) -> Result<Tensor2> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch("tensor from a non-square map".into()));
        }
        Ok(Tensor2::from_fn(m.field(), m.rows(), |i, j| m.get(i, j).clone()))
    }

    /// `(f ⊗ 1)`: applies `f` to the first leg.
    pub fn act_first(&self, f: &Matrix) -> Tensor2 {
        Tensor2::from_map(&f.mul(&self.to_map())).expect("square")
    }

    /// `(1 ⊗ g)`: applies `g` to the second leg.
    pub fn act_second(&self, g: &Matrix) -> Tensor2 {
        Tensor2::from_map(&self.to_map().mul(&g.transpose())).expect("square")
    }

    /// Pairing `⟨a* ⊗ b*, t⟩ = Σ a_i b_j t_ij`.
    pub fn pair(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                let c = self.get(i, j);
                if !y.is_zero() && !c.is_zero() {
                    acc += &(x * y) * c;
                }
            }
        }
        acc
    }
}

/// `c[i][j][k]`: either a product `e_i ⋄ e_j = Σ_k c_ijk e_k`, a
/// comultiplication `Δ(e_i) = Σ c_ijk e_j ⊗ e_k`, or an element of `V^{⊗3}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    field: FieldSpec,
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(field: FieldSpec, dim: usize) -> Self {
        Tensor3 { field, dim, coeffs: vec![field.zero(); dim * dim * dim] }
    }

    pub fn from_fn(field: FieldSpec, dim: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut t = Self::zeros(field, dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    t.coeffs[(i * dim + j) * dim + k] = f(i, j, k);
                }
            }
        }
        t
    }

    /// Builds from sparse `(i, j, k, value)` entries; repeated positions add.
    pub fn from_entries(
        field: FieldSpec,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut t = Self::zeros(field, dim);
        for (i, j, k, v) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::DimensionMismatch(format!("index ({i},{j},{k}) out of range for dimension {dim}")));
            }
            t.add_to(i, j, k, &v);
        }
        Ok(t)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.coeffs[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let x = self.idx(i, j, k);
        self.coeffs[x] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, v: &Scalar) {
        let x = self.idx(i, j, k);
        self.coeffs[x] += v;
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coeffs)
    }

    /// Nonzero entries in lexicographic index order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        let n = self.dim;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(x, v)| (x / (n * n), (x / n) % n, x % n, v))
    }

    pub fn add(&self, o: &Tensor3) -> Tensor3 {
        self.zip(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &Tensor3) -> Tensor3 {
        self.zip(o, |a, b| a - b)
    }

    pub fn neg(&self) -> Tensor3 {
        Tensor3 { field: self.field, dim: self.dim, coeffs: self.coeffs.iter().map(|x| -x).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Tensor3 {
        Tensor3 { field: self.field, dim: self.dim, coeffs: self.coeffs.iter().map(|x| c * x).collect() }
    }

    fn zip(&self, o: &Tensor3, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Tensor3 {
        assert_eq!(self.dim, o.dim, "tensor dimension mismatch");
        Tensor3 {
            field: self.field,
            dim: self.dim,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    /// Permutes legs: output leg `s` carries input leg `perm[s]`.
    pub fn permute(&self, perm: [usize; 3]) -> Tensor3 {
        Tensor3::from_fn(self.field, self.dim, |a, b, c| {
            let out = [a, b, c];
            let mut inp = [0; 3];
            for s in 0..3 {
                inp[perm[s]] = out[s];
            }
            self.get(inp[0], inp[1], inp[2]).clone()
        })
    }

    /// `τ ⊗ 1`
    pub fn swap12(&self) -> Tensor3 {
        self.permute([1, 0, 2])
    }

    /// `1 ⊗ τ`
    pub fn swap23(&self) -> Tensor3 {
        self.permute([0, 2, 1])
    }

    /// Applies `f` to leg `slot` (0-based).
    pub fn act(&self, slot: usize, f: &Matrix) -> Tensor3 {
        let n = self.dim;
        let mut out = Tensor3::zeros(self.field, n);
        for (i, j, k, v) in self.nonzero() {
            let idx = [i, j, k];
            for a in 0..n {
                let c = f.get(a, idx[slot]);
                if c.is_zero() {
                    continue;
                }
                let mut t = idx;
                t[slot] = a;
                out.add_to(t[0], t[1], t[2], &(c * v));
            }
        }
        out
    }

    /// For a comultiplication: `Σ x_i Δ(e_i)`.
    pub fn comult_apply(&self, x: &[Scalar]) -> Tensor2 {
        let n = self.dim;
        let mut out = Tensor2::zeros(self.field, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        out.add_to(j, k, &(xi * c));
                    }
                }
            }
        }
        out
    }

    /// `(Δ ⊗ 1) t` for a comultiplication `Δ` (this tensor).
    pub fn comult_on_first(&self, t: &Tensor2) -> Tensor3 {
        let n = self.dim;
        let mut out = Tensor3::zeros(self.field, n);
        for j in 0..n {
            for k in 0..n {
                let w = t.get(j, k);
                if w.is_zero() {
                    continue;
                }
                for a in 0..n {
                    for b in 0..n {
                        let c = self.get(j, a, b);
                        if !c.is_zero() {
                            out.add_to(a, b, k, &(w * c));
                        }
                    }
                }
            }
        }
        out
    }

    /// `(1 ⊗ Δ) t` for a comultiplication `Δ` (this tensor).
    pub fn comult_on_second(&self, t: &Tensor2) -> Tensor3 {
        let n = self.dim;
        let mut out = Tensor3::zeros(self.field, n);
        for j in 0..n {
            for k in 0..n {
                let w = t.get(j, k);
                if w.is_zero() {
                    continue;
                }
                for a in 0..n {
                    for b in 0..n {
                        let c = self.get(k, a, b);
                        if !c.is_zero() {
                            out.add_to(j, a, b, &(w * c));
                        }
                    }
                }
            }
        }
        out
    }

    /// Reads a comultiplication off a product on the dual space:
    /// `⟨x, a* ⋄ b*⟩ = ⟨Δ(x), a* ⊗ b*⟩` means `Δ[i][j][k] = c[j][k][i]`.
    pub fn product_to_comult(&self) -> Tensor3 {
        Tensor3::from_fn(self.field, self.dim, |i, j, k| self.get(j, k, i).clone())
    }

    /// Inverse of [`Tensor3::product_to_comult`].
    pub fn comult_to_product(&self) -> Tensor3 {
        Tensor3::from_fn(self.field, self.dim, |j, k, i| self.get(i, j, k).clone())
    }
}

/// A bilinear product given by structure constants, with a sparse index of
/// nonzero constants per basis pair.
#[derive(Clone, Debug)]
pub struct Product {
    tensor: Tensor3,
    table: Vec<Vec<(usize, Scalar)>>,
}

impl PartialEq for Product {
    fn eq(&self, other: &Self) -> bool {
        self.tensor == other.tensor
    }
}

impl Eq for Product {}

impl Product {
    pub fn new(tensor: Tensor3) -> Self {
        let n = tensor.dim();
        let mut table = vec![Vec::new(); n * n];
        for (i, j, k, v) in tensor.nonzero() {
            table[i * n + j].push((k, v.clone()));
        }
        Product { tensor, table }
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Product::new(Tensor3::zeros(field, dim))
    }

    pub fn tensor(&self) -> &Tensor3 {
        &self.tensor
    }

    pub fn dim(&self) -> usize {
        self.tensor.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.tensor.field()
    }

    /// Nonzero constants of `e_i ⋄ e_j`.
    pub fn basis_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn basis(&self, i: usize, j: usize) -> Vector {
        let mut v = self.field().zeros(self.dim());
        for (k, c) in self.basis_terms(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = self.field().zeros(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi * yj;
                for (k, c) in &self.table[i * n + j] {
                    out[*k] += &w * c;
                }
            }
        }
        out
    }

    /// Left multiplication operator `l(x): y ↦ x ⋄ y`.
    pub fn left(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(x, &self.field().unit(n, j))).collect();
        Matrix::from_columns(self.field(), n, &cols)
    }

    /// Right multiplication operator `r(x): y ↦ y ⋄ x`.
    pub fn right(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(&self.field().unit(n, j), x)).collect();
        Matrix::from_columns(self.field(), n, &cols)
    }

    pub fn left_basis(&self, i: usize) -> Matrix {
        self.left(&self.field().unit(self.dim(), i))
    }

    pub fn right_basis(&self, i: usize) -> Matrix {
        self.right(&self.field().unit(self.dim(), i))
    }

    /// `l(e_i)` for every basis vector.
    pub fn left_family(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.left_basis(i)).collect()
    }

    /// `r(e_i)` for every basis vector.
    pub fn right_family(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.right_basis(i)).collect()
    }

    pub fn add(&self, o: &Product) -> Product {
        Product::new(self.tensor.add(&o.tensor))
    }

    pub fn is_zero(&self) -> bool {
        self.tensor.is_zero()
    }

    /// The opposite product `x ⋄' y = y ⋄ x`.
    pub fn opposite(&self) -> Product {
        Product::new(self.tensor.permute([1, 0, 2]))
    }
}

/// `B[i][j] = B(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    matrix: Matrix,
}

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch("bilinear form must be square".into()));
        }
        Ok(BilinearForm { matrix })
    }

    pub fn zeros(field: FieldSpec, dim: usize) -> Self {
        BilinearForm { matrix: Matrix::zeros(field, dim, dim) }
    }

    pub fn from_fn(field: FieldSpec, dim: usize, f: impl FnMut(usize, usize) -> Scalar) -> Self {
        BilinearForm { matrix: Matrix::from_fn(field, dim, dim, f) }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field()
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        self.matrix.get(i, j)
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        crate::linalg::dot(x, &self.matrix.apply(y), self.field())
    }

    pub fn transpose(&self) -> BilinearForm {
        BilinearForm { matrix: self.matrix.transpose() }
    }

    pub fn is_symmetric(&self) -> bool {
        self.matrix == self.matrix.transpose()
    }

    pub fn is_skew(&self) -> bool {
        self.matrix.add(&self.matrix.transpose()).is_zero()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.is_invertible()
    }

    /// `B(x, y) − B(y, x)`.
    pub fn antisymmetrize(&self) -> BilinearForm {
        BilinearForm { matrix: self.matrix.sub(&self.matrix.transpose()) }
    }
}

/// The form induced by an invertible `T: V* → V`, normalized so that the
/// form attached to `Σ (e_i ⊗ e_i* − e_i* ⊗ e_i)` is the standard
/// `ω(x + a*, y + b*) = ⟨a*, y⟩ − ⟨x, b*⟩`. Concretely
/// `B(e_i, e_j) = ⟨T⁻¹(e_j), e_i⟩`, the matrix of `T⁻¹` itself.
pub fn map_to_form(t: &Matrix) -> Result<BilinearForm> {
    BilinearForm::new(t.inverse()?)
}

/// Inverse of [`map_to_form`]: the tensor whose map induces `b`.
pub fn form_to_tensor(b: &BilinearForm) -> Result<Tensor2> {
    match b.matrix().inverse() {
        Ok(m) => Tensor2::from_map(&m),
        Err(Error::SingularMap) => Err(Error::Degenerate),
        Err(e) => Err(e),
    }
}

/// Dual representation: `ρ*(x) = ρ(x)ᵀ`, so `⟨ρ*(x) v*, u⟩ = ⟨v*, ρ(x) u⟩`.
pub fn dual_action(family: &[Matrix]) -> Vec<Matrix> {
    family.iter().map(Matrix::transpose).collect()
}

/// Slot placement `r_ab`: first leg in slot `a`, second in slot `b`
/// (slots numbered 1..=3).
pub type Slots = (usize, usize);

/// `r_ab ⋄ s_cd` in `V^{⊗3}`. The two placements share exactly one slot; in
/// it the leg of `r` is multiplied on the left of the leg of `s`. The other
/// two legs stay where they were placed.
pub fn pair_product(r: &Tensor2, r_slots: Slots, s: &Tensor2, s_slots: Slots, product: &Product) -> Result<Tensor3> {
    let n = product.dim();
    if r.dim() != n || s.dim() != n {
        return Err(Error::DimensionMismatch("tensor and product dimensions differ".into()));
    }
    let valid = |(a, b): Slots| (1..=3).contains(&a) && (1..=3).contains(&b) && a != b;
    if !valid(r_slots) || !valid(s_slots) {
        return Err(Error::Slot(format!("bad placement {r_slots:?} / {s_slots:?}")));
    }
    let rs = [r_slots.0, r_slots.1];
    let ss = [s_slots.0, s_slots.1];
    let shared: Vec<usize> = rs.iter().copied().filter(|x| ss.contains(x)).collect();
    if shared.len() != 1 {
        return Err(Error::Slot(format!("placements {r_slots:?} and {s_slots:?} must share exactly one slot")));
    }
    let shared = shared[0];
    // Leg positions (0 = first leg, 1 = second) sitting in the shared slot.
    let r_shared = rs.iter().position(|&x| x == shared).unwrap();
    let s_shared = ss.iter().position(|&x| x == shared).unwrap();
    let r_free_slot = rs[1 - r_shared] - 1;
    let s_free_slot = ss[1 - s_shared] - 1;
    let shared_slot = shared - 1;

    let mut out = Tensor3::zeros(product.field(), n);
    for i in 0..n {
        for j in 0..n {
            let a = r.get(i, j);
            if a.is_zero() {
                continue;
            }
            let r_legs = [i, j];
            for k in 0..n {
                for l in 0..n {
                    let b = s.get(k, l);
                    if b.is_zero() {
                        continue;
                    }
                    let s_legs = [k, l];
                    let w = a * b;
                    let mut idx = [0usize; 3];
                    idx[r_free_slot] = r_legs[1 - r_shared];
                    idx[s_free_slot] = s_legs[1 - s_shared];
                    for (m, c) in product.basis_terms(r_legs[r_shared], s_legs[s_shared]) {
                        idx[shared_slot] = *m;
                        out.add_to(idx[0], idx[1], idx[2], &(&w * c));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Result of [`orth_complement`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complement {
    /// Reduced basis of `W^⊥ = {x : B(x, w) = 0 for all w ∈ W}`.
    pub basis: Vec<Vector>,
    pub isotropic: bool,
    pub lagrangian: bool,
}

pub fn orth_complement(b: &BilinearForm, w: &[Vector]) -> Result<Complement> {
    let n = b.dim();
    if w.iter().any(|v| v.len() != n) {
        return Err(Error::DimensionMismatch("subspace vectors have the wrong length".into()));
    }
    let field = b.field();
    // x ↦ B(x, w) has coefficient row (B w)ᵀ.
    let rows: Vec<Vector> = w.iter().map(|v| b.matrix().apply(v)).collect();
    let basis = if rows.is_empty() {
        (0..n).map(|i| field.unit(n, i)).collect()
    } else {
        Matrix::from_rows(field, rows)?.nullspace()
    };
    let isotropic = w.iter().all(|x| w.iter().all(|y| b.eval(x, y).is_zero()));
    let w_rank = crate::linalg::span_rank(field, n, w);
    let lagrangian = isotropic && w_rank == basis.len();
    Ok(Complement { basis, isotropic, lagrangian })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn skew_tensor_to_map() {
        let f = q();
        let mut r = Tensor2::zeros(f, 2);
        r.set(0, 1, f.int(1));
        r.set(1, 0, f.int(-1));
        let t = r.to_map();
        // T(e1*) = -e2
        assert_eq!(t.column(0), vec![f.int(0), f.int(-1)]);
        assert_eq!(Tensor2::from_map(&t).unwrap(), r);
    }

    #[test]
    fn forms_from_maps() {
        let f = q();
        let mut r = Tensor2::zeros(f, 2);
        r.set(0, 1, f.int(1));
        r.set(1, 0, f.int(-1));
        let b = map_to_form(&r.to_map()).unwrap();
        assert_eq!(b.get(0, 1), &f.int(-1));
        assert!(b.is_skew());

        let mut s = Tensor2::zeros(f, 2);
        s.set(0, 1, f.int(1));
        s.set(1, 0, f.int(1));
        let b = map_to_form(&s.to_map()).unwrap();
        assert_eq!(b.get(0, 1), &f.int(1));
        assert_eq!(b.get(1, 0), &f.int(1));

        assert_eq!(map_to_form(&Matrix::zeros(f, 2, 2)), Err(Error::SingularMap));
        assert_eq!(form_to_tensor(&b).unwrap(), s);
    }

    #[test]
    fn slot_patterns_must_share_one_slot() {
        let f = q();
        let r = Tensor2::zeros(f, 2);
        let p = Product::zero(f, 2);
        assert!(pair_product(&r, (1, 2), &r, (1, 2), &p).is_err());
        assert!(pair_product(&r, (1, 1), &r, (1, 3), &p).is_err());
        assert!(pair_product(&r, (1, 2), &r, (2, 3), &p).is_ok());
    }

    #[test]
    fn orth_complement_of_a_lagrangian_line() {
        let f = q();
        // hyperbolic plane, W = span(e1)
        let b = BilinearForm::from_fn(f, 2, |i, j| if i != j { f.one() } else { f.zero() });
        let c = orth_complement(&b, &[f.unit(2, 0)]).unwrap();
        assert_eq!(c.basis, vec![f.unit(2, 0)]);
        assert!(c.isotropic && c.lagrangian);
        let c = orth_complement(&b, &[vec![f.one(), f.one()]]).unwrap();
        assert!(!c.isotropic && !c.lagrangian);
    }

    #[test]
    fn leg_actions() {
        let f = q();
        let mut t = Tensor2::zeros(f, 2);
        t.set(0, 1, f.one());
        // f = e1 -> e2 swap matrix
        let sw = Matrix::from_fn(f, 2, 2, |i, j| if i != j { f.one() } else { f.zero() });
        let a = t.act_first(&sw);
        assert_eq!(a.get(1, 1), &f.one());
        let b = t.act_second(&sw);
        assert_eq!(b.get(0, 0), &f.one());
    }
}
