//! Seeded instance generators shared by the test suites.
//!
//! Every generator takes an explicit RNG so that failures reproduce from
//! the seed printed by the caller.

use prealt_core::altalg::{check_alternative, AlternativeAlgebra};
use prealt_core::catalog;
use prealt_core::construct::al_induce;
use prealt_core::field::{FieldSpec, Scalar};
use prealt_core::linalg::Matrix;
use prealt_core::prealt::{check_prealternative, PreAlternativeAlgebra};
use prealt_core::tensor::{Tensor2, Tensor3};
use prealt_core::ybe::{brute_search, SearchHit, SearchTarget, DEFAULT_SEARCH_CAP};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gf(p: u32) -> FieldSpec {
    FieldSpec::prime(p).expect("odd prime")
}

/// Uniform over a prime field; small integers in `[-2, 2]` over ℚ.
pub fn scalar(f: FieldSpec, rng: &mut TestRng) -> Scalar {
    match f.size() {
        Some(p) => f.int(rng.gen_range(0..p as i64)),
        None => f.int(rng.gen_range(-2..=2)),
    }
}

pub fn vector(f: FieldSpec, n: usize, rng: &mut TestRng) -> Vec<Scalar> {
    (0..n).map(|_| scalar(f, rng)).collect()
}

pub fn matrix(f: FieldSpec, rows: usize, cols: usize, rng: &mut TestRng) -> Matrix {
    Matrix::from_fn(f, rows, cols, |_, _| scalar(f, rng))
}

pub fn invertible(f: FieldSpec, n: usize, rng: &mut TestRng) -> Matrix {
    loop {
        let m = matrix(f, n, n, rng);
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn tensor2(f: FieldSpec, n: usize, rng: &mut TestRng) -> Tensor2 {
    Tensor2::from_fn(f, n, |_, _| scalar(f, rng))
}

pub fn symmetric(f: FieldSpec, n: usize, rng: &mut TestRng) -> Tensor2 {
    let t = tensor2(f, n, rng);
    Tensor2::from_fn(f, n, |i, j| if i <= j { t.get(i, j).clone() } else { t.get(j, i).clone() })
}

pub fn skew(f: FieldSpec, n: usize, rng: &mut TestRng) -> Tensor2 {
    let t = tensor2(f, n, rng);
    Tensor2::from_fn(f, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Less => t.get(i, j).clone(),
        std::cmp::Ordering::Equal => f.zero(),
        std::cmp::Ordering::Greater => -t.get(j, i).clone(),
    })
}

pub fn tensor3(f: FieldSpec, n: usize, rng: &mut TestRng) -> Tensor3 {
    Tensor3::from_fn(f, n, |_, _, _| scalar(f, rng))
}

/// A cube with roughly `density` of its entries nonzero.
pub fn sparse_tensor3(f: FieldSpec, n: usize, density: f64, rng: &mut TestRng) -> Tensor3 {
    Tensor3::from_fn(f, n, |_, _, _| if rng.gen_bool(density) { scalar(f, rng) } else { f.zero() })
}

fn from_table(f: FieldSpec, n: usize, entries: &[(usize, usize, usize, i64)]) -> AlternativeAlgebra {
    let t = Tensor3::from_entries(f, n, entries.iter().map(|&(i, j, k, c)| (i, j, k, f.int(c)))).expect("in range");
    AlternativeAlgebra::from_tensor(t)
}

/// Hand-picked alternative algebras of dimension at most three.
pub fn small_alternative(f: FieldSpec) -> Vec<AlternativeAlgebra> {
    vec![
        AlternativeAlgebra::zero(f, 1),
        catalog::halved_field_negative(f),
        AlternativeAlgebra::zero(f, 2),
        catalog::n2(f),
        // k ⊕ k
        from_table(f, 2, &[(0, 0, 0, 1), (1, 1, 1, 1)]),
        // k[x]/x² with unit e1
        from_table(f, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]),
        // left and right zero-type idempotent actions
        from_table(f, 2, &[(0, 0, 0, 1), (0, 1, 1, 1)]),
        from_table(f, 2, &[(0, 0, 0, 1), (1, 0, 1, 1)]),
        AlternativeAlgebra::zero(f, 3),
        catalog::n3(f),
        // upper triangular 2×2 matrices e11, e12, e22
        from_table(f, 3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)]),
        // e1 e2 = e3
        from_table(f, 3, &[(0, 1, 2, 1)]),
        // e1 e2 = e3 = −e2 e1
        from_table(f, 3, &[(0, 1, 2, 1), (1, 0, 2, -1)]),
        // n2 ⊕ k
        from_table(f, 3, &[(0, 0, 1, 1), (2, 2, 2, 1)]),
        // k ⊕ k ⊕ k
        from_table(f, 3, &[(0, 0, 0, 1), (1, 1, 1, 1), (2, 2, 2, 1)]),
    ]
}

/// Every alternative structure on a 2-dimensional space over GF(3)
/// (all 3⁸ cubes, filtered).
pub fn all_dim2_alternative_gf3() -> Vec<AlternativeAlgebra> {
    let f = gf(3);
    let mut out = Vec::new();
    for code in 0..3u32.pow(8) {
        let mut c = code;
        let t = Tensor3::from_fn(f, 2, |_, _, _| {
            let v = c % 3;
            c /= 3;
            f.int(v as i64)
        });
        let a = AlternativeAlgebra::from_tensor(t);
        if check_alternative(&a).passed() {
            out.push(a);
        }
    }
    out
}

/// A random alternative algebra of dimension at most three: a
/// hand-picked one moved to a random basis.
pub fn alternative(f: FieldSpec, rng: &mut TestRng) -> AlternativeAlgebra {
    let pool = small_alternative(f);
    let a = pool.choose(rng).expect("nonempty");
    a.transport(&invertible(f, a.dim(), rng)).expect("invertible")
}

/// Pre-alternative structures induced by every Al-operator on the regular
/// bimodule of each hand-picked algebra of dimension at most `max_dim`
/// (finite fields only).
pub fn induced_prealternative(f: FieldSpec, max_dim: usize) -> Vec<PreAlternativeAlgebra> {
    let mut out = Vec::new();
    for a in small_alternative(f).into_iter().filter(|a| a.dim() <= max_dim) {
        let act = a.regular_action();
        let hits = brute_search(&SearchTarget::AlOperator(&a, &act), DEFAULT_SEARCH_CAP).expect("finite field");
        for h in hits {
            if let SearchHit::Operator(t) = h {
                out.push(al_induce(&a, &act, &t).expect("search hits are operators"));
            }
        }
    }
    out
}

/// A pool of valid pre-alternative algebras of dimension at most three.
pub fn prealternative_pool(f: FieldSpec) -> Vec<PreAlternativeAlgebra> {
    let mut pool = vec![catalog::p2(f), PreAlternativeAlgebra::zero(f, 2)];
    if let Ok(p3) = catalog::p3_graded(f) {
        pool.push(p3);
    }
    if f.is_finite() {
        // dimension 3 operators would be 3⁹ candidates per algebra
        pool.extend(induced_prealternative(f, 2).into_iter().filter(|p| !p.prec().is_zero() || !p.succ().is_zero()));
    }
    debug_assert!(pool.iter().all(|p| check_prealternative(p).passed()));
    pool
}

/// A random member of `pool` moved to a random basis.
pub fn prealternative(pool: &[PreAlternativeAlgebra], rng: &mut TestRng) -> PreAlternativeAlgebra {
    let p = pool.choose(rng).expect("nonempty pool");
    let f = p.field();
    p.transport(&invertible(f, p.dim(), rng)).expect("invertible")
}
