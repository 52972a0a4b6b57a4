use prealt_core::field::FieldSpec;
use prealt_core::linalg::Matrix;
use prealt_core::tensor::{dual_action, form_to_tensor, map_to_form, orth_complement, BilinearForm, Tensor2};
use prealt_core::ybe::standard_symplectic;
use prealt_testkit as tk;
use proptest::prelude::*;

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

fn t2(entries: &[(usize, usize, i64)]) -> Tensor2 {
    let mut r = Tensor2::zeros(q(), 2);
    for &(i, j, c) in entries {
        r.set(i, j, q().int(c));
    }
    r
}

#[test]
fn flip_examples() {
    assert!(Tensor2::zeros(q(), 3).flip().is_zero());
    assert_eq!(t2(&[(0, 1, 1)]).flip(), t2(&[(1, 0, 1)]));
    let r = t2(&[(0, 1, 1), (1, 0, -1)]);
    assert_eq!(r.flip(), r.neg());
}

#[test]
fn tensor_to_map_examples() {
    assert!(Tensor2::zeros(q(), 2).to_map().is_zero());
    let skew = t2(&[(0, 1, 1), (1, 0, -1)]).to_map();
    assert_eq!(skew.column(0), vec![q().zero(), q().int(-1)]);
    assert_eq!(skew.column(1), vec![q().one(), q().zero()]);
    let sym = t2(&[(0, 1, 1), (1, 0, 1)]).to_map();
    assert_eq!(sym.column(0), vec![q().zero(), q().one()]);
    assert_eq!(sym.column(1), vec![q().one(), q().zero()]);
}

#[test]
fn map_to_form_examples() {
    let id = map_to_form(&Matrix::identity(q(), 2)).unwrap();
    assert_eq!(id.matrix(), &Matrix::identity(q(), 2));
    let b = map_to_form(&t2(&[(0, 1, 1), (1, 0, 1)]).to_map()).unwrap();
    assert_eq!(
        (b.get(0, 1), b.get(1, 0), b.get(0, 0), b.get(1, 1)),
        (&q().one(), &q().one(), &q().zero(), &q().zero())
    );
    let w = map_to_form(&t2(&[(0, 1, 1), (1, 0, -1)]).to_map()).unwrap();
    assert!(w.is_skew());
    assert_eq!(w.get(0, 1), &q().int(-1));
    assert!(map_to_form(&Matrix::zeros(q(), 2, 2)).is_err());
}

#[test]
fn dual_action_examples() {
    let n2 = prealt_core::catalog::n2(q());
    let l = dual_action(&n2.product().left_family());
    // l*(e1) sends e2* to e1* and nothing else
    assert_eq!(l[0].apply(&q().unit(2, 1)), q().unit(2, 0));
    assert!(l[0].apply(&q().unit(2, 0)).iter().all(|c| c.is_zero()));
    assert!(l[1].is_zero());
    let ids = vec![Matrix::identity(q(), 3); 2];
    assert_eq!(dual_action(&ids), ids);
}

#[test]
fn orth_complement_examples() {
    let id = BilinearForm::new(Matrix::identity(q(), 3)).unwrap();
    let whole = orth_complement(&id, &[]).unwrap();
    assert_eq!(whole.basis.len(), 3);
    assert!(whole.isotropic && !whole.lagrangian);
    let line = orth_complement(&id, &[q().unit(3, 0)]).unwrap();
    assert_eq!(line.basis.len(), 2);
    assert!(line.basis.iter().all(|v| v[0].is_zero()));
    // A inside A ⊕ A* is Lagrangian for the standard symplectic form
    let w = standard_symplectic(q(), 2);
    let a: Vec<_> = (0..2).map(|i| q().unit(4, i)).collect();
    let c = orth_complement(&w, &a).unwrap();
    assert!(c.lagrangian);
    assert!(c.basis.iter().all(|v| v[2].is_zero() && v[3].is_zero()));
}

proptest! {
    #[test]
    fn flip_is_involution_and_splits(seed in any::<u64>(), n in 1usize..5, p in prop::sample::select(vec![0u32, 3, 5, 7])) {
        let f = if p == 0 { q() } else { tk::gf(p) };
        let mut rng = tk::rng(seed);
        let r = tk::tensor2(f, n, &mut rng);
        prop_assert_eq!(r.flip().flip(), r.clone());
        let half = f.ratio(1, 2).unwrap();
        let sym = r.add(&r.flip()).scale(&half);
        let skew = r.sub(&r.flip()).scale(&half);
        prop_assert!(sym.is_symmetric() && skew.is_skew());
        prop_assert_eq!(sym.add(&skew), r);
    }

    #[test]
    fn map_reading_roundtrips(seed in any::<u64>(), n in 1usize..5) {
        let f = tk::gf(5);
        let r = tk::tensor2(f, n, &mut tk::rng(seed));
        prop_assert_eq!(Tensor2::from_map(&r.to_map()).unwrap(), r);
    }

    #[test]
    fn form_symmetry_follows_tensor(seed in any::<u64>(), n in 1usize..5, kind in 0u8..3) {
        let f = tk::gf(7);
        let mut rng = tk::rng(seed);
        let r = match kind {
            0 => tk::symmetric(f, n, &mut rng),
            1 => tk::skew(f, n, &mut rng),
            _ => tk::tensor2(f, n, &mut rng),
        };
        if let Ok(b) = map_to_form(&r.to_map()) {
            prop_assert_eq!(b.is_symmetric(), r.is_symmetric());
            prop_assert_eq!(b.is_skew(), r.is_skew());
            prop_assert_eq!(form_to_tensor(&b).unwrap(), r);
        }
    }

    #[test]
    fn dual_action_twice_is_identity(seed in any::<u64>(), n in 1usize..4, m in 1usize..4) {
        let f = tk::gf(3);
        let mut rng = tk::rng(seed);
        let fam: Vec<Matrix> = (0..n).map(|_| tk::matrix(f, m, m, &mut rng)).collect();
        prop_assert_eq!(dual_action(&dual_action(&fam)), fam);
    }
}
