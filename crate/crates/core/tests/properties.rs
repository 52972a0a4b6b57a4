//! Structural invariants as properties over seeded random instances.
//!
//! Each case draws a seed; the instance is built from it with the shared
//! generators so a failure shrinks to a reproducible seed.

use prealt_core::altalg::{
    alt_dual_bimodule, check_alt_bimodule, check_alternative, semidirect_unchecked, AltBimoduleAction,
    AlternativeAlgebra,
};
use prealt_core::bialg::{
    bialgebra_check, bialgebra_residuals, coboundary_comult, coboundary_condition_check, dual_bialgebra,
    pad_closed_form, pad_double, PreAltBialgebra,
};
use prealt_core::construct::dual_regular;
use prealt_core::error::Error;
use prealt_core::field::FieldSpec;
use prealt_core::linalg::Matrix;
use prealt_core::prealt::{
    associated_algebra, check_dendriform, check_prealt_bimodule, check_prealternative, prealt_semidirect_unchecked,
    standard_actions, PreAltBimoduleAction, PreAlternativeAlgebra,
};
use prealt_core::tensor::Tensor2;
use prealt_core::ybe::{
    aybe_residual, brute_search, canonical_r, pa_residuals, yb_operator_check, Ambient, AybeVariant, CanonicalSign,
    SearchHit, SearchTarget, YbMode, DEFAULT_SEARCH_CAP,
};
use prealt_testkit as tk;
use proptest::prelude::*;
use rand::Rng;

fn small_field() -> impl Strategy<Value = FieldSpec> {
    prop::sample::select(vec![3u32, 5]).prop_map(tk::gf)
}

fn labels(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("v{i}")).collect()
}

fn conjugate(family: &[Matrix], g: &Matrix, gi: &Matrix) -> Vec<Matrix> {
    family.iter().map(|m| g.mul(m).mul(gi)).collect()
}

/// A genuine bimodule in a random basis, a perturbed one, or random maps.
fn alt_action(a: &AlternativeAlgebra, rng: &mut tk::TestRng) -> AltBimoduleAction {
    let f = a.field();
    let n = a.dim();
    let (l, r) = match rng.gen_range(0..4) {
        0 => {
            let reg = a.regular_action();
            (reg.left_family().to_vec(), reg.right_family().to_vec())
        }
        1 => {
            let d = dual_regular(a);
            (d.left_family().to_vec(), d.right_family().to_vec())
        }
        2 => {
            let reg = a.regular_action();
            let mut l = reg.left_family().to_vec();
            l[rng.gen_range(0..n)].set(rng.gen_range(0..n), rng.gen_range(0..n), tk::scalar(f, rng));
            (l, reg.right_family().to_vec())
        }
        _ => {
            let m = rng.gen_range(1..=2);
            let fam = |rng: &mut tk::TestRng| (0..n).map(|_| tk::matrix(f, m, m, rng)).collect::<Vec<_>>();
            (fam(rng), fam(rng))
        }
    };
    let m = l[0].rows();
    let g = tk::invertible(f, m, rng);
    let gi = g.inverse().unwrap();
    AltBimoduleAction::new(f, labels(m), conjugate(&l, &g, &gi), conjugate(&r, &g, &gi)).unwrap()
}

fn prealt_action(p: &PreAlternativeAlgebra, rng: &mut tk::TestRng) -> PreAltBimoduleAction {
    let f = p.field();
    let acts = standard_actions(p);
    let act = &acts[rng.gen_range(0..acts.len())].1;
    let m = act.module_dim();
    let g = tk::invertible(f, m, rng);
    let gi = g.inverse().unwrap();
    let mut fams = act.families().map(|fam| conjugate(fam, &g, &gi));
    if rng.gen_bool(0.5) {
        let i = rng.gen_range(0..p.dim());
        fams[rng.gen_range(0..4)][i].set(rng.gen_range(0..m), rng.gen_range(0..m), tk::scalar(f, rng));
    }
    let [lp, rp, ls, rs] = fams;
    PreAltBimoduleAction::new(f, act.labels().to_vec(), lp, rp, ls, rs).unwrap()
}

fn pool_member(f: FieldSpec, rng: &mut tk::TestRng) -> PreAlternativeAlgebra {
    tk::prealternative(&tk::prealternative_pool(f), rng)
}

/// A random tensor, or a search hit for the given target.
fn sample_or_hit(target: &SearchTarget<'_>, random: Tensor2, rng: &mut tk::TestRng) -> Tensor2 {
    if rng.gen_bool(0.5) {
        return random;
    }
    let hits = brute_search(target, DEFAULT_SEARCH_CAP).unwrap();
    match &hits[rng.gen_range(0..hits.len())] {
        SearchHit::Solution(s) => s.r().clone(),
        SearchHit::Operator(_) => unreachable!("tensor search"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quadratic_and_linearized_alternativity_agree(f in small_field(), seed in any::<u64>(), sparse in any::<bool>()) {
        let mut rng = tk::rng(seed);
        let a = if sparse {
            let n = rng.gen_range(1..=3);
            AlternativeAlgebra::from_tensor(tk::sparse_tensor3(f, n, 0.15, &mut rng))
        } else {
            tk::alternative(f, &mut rng)
        };
        let rep = check_alternative(&a);
        let quad = !rep.fails("alt.left") && !rep.fails("alt.right");
        let lin = !rep.fails("alt.left.lin") && !rep.fails("alt.right.lin");
        prop_assert_eq!(quad, lin);
    }

    #[test]
    fn bimodule_iff_semidirect_is_alternative(f in small_field(), seed in any::<u64>()) {
        let mut rng = tk::rng(seed);
        let a = tk::alternative(f, &mut rng);
        let act = alt_action(&a, &mut rng);
        let bimodule = check_alt_bimodule(&a, &act).unwrap().passed();
        prop_assert_eq!(bimodule, check_alternative(&semidirect_unchecked(&a, &act).unwrap()).passed());
        if bimodule {
            prop_assert!(check_alt_bimodule(&a, &alt_dual_bimodule(&act)).unwrap().passed());
        }
    }

    #[test]
    fn prealt_bimodule_iff_semidirect_is_prealternative(f in small_field(), seed in any::<u64>()) {
        let mut rng = tk::rng(seed);
        let p = pool_member(f, &mut rng);
        let act = prealt_action(&p, &mut rng);
        let bimodule = check_prealt_bimodule(&p, &act).unwrap().passed();
        prop_assert_eq!(bimodule, check_prealternative(&prealt_semidirect_unchecked(&p, &act).unwrap()).passed());
        if bimodule {
            let a = associated_algebra(&p);
            prop_assert!(check_alt_bimodule(&a, &act.circ_action()).unwrap().passed());
            prop_assert!(check_alt_bimodule(&a, &act.split_action()).unwrap().passed());
        }
    }

    #[test]
    fn prealternative_algebras_split_alternative_ones(f in small_field(), seed in any::<u64>()) {
        let mut rng = tk::rng(seed);
        let p = pool_member(f, &mut rng);
        let a = associated_algebra(&p);
        prop_assert!(check_alternative(&a).passed());
        let split = AltBimoduleAction::new(f, p.labels().to_vec(), p.succ().left_family(), p.prec().right_family())
            .unwrap();
        prop_assert!(check_alt_bimodule(&a, &split).unwrap().passed());
        // Alternative bimodules of the sum algebra lift as (0, R, L, 0).
        let lifted = PreAltBimoduleAction::from_alt_action(&a.regular_action());
        prop_assert!(check_prealt_bimodule(&p, &lifted).unwrap().passed());
    }

    #[test]
    fn dendriform_implies_prealternative(f in small_field(), seed in any::<u64>()) {
        let mut rng = tk::rng(seed);
        let n = rng.gen_range(1..=2);
        let p = PreAlternativeAlgebra::from_tensors(
            tk::sparse_tensor3(f, n, 0.2, &mut rng),
            tk::sparse_tensor3(f, n, 0.2, &mut rng),
        )
        .unwrap();
        if check_dendriform(&p).passed() {
            prop_assert!(check_prealternative(&p).passed());
        }
    }

    #[test]
    fn skew_forms_of_the_associative_equation_agree(f in small_field(), seed in any::<u64>()) {
        let mut rng = tk::rng(seed);
        let a = tk::alternative(f, &mut rng);
        let random = tk::skew(f, a.dim(), &mut rng);
        let r = sample_or_hit(&SearchTarget::AybeSkew(&a), random, &mut rng);
        let a1 = aybe_residual(&a, &r, AybeVariant::A1).unwrap().is_zero();
        prop_assert_eq!(a1, aybe_residual(&a, &r, AybeVariant::A2).unwrap().is_zero());
        let op = yb_operator_check(&Ambient::Alternative(a.clone()), &r, YbMode::SkewAybe).unwrap().passed();
        prop_assert_eq!(a1, op);
    }

    #[test]
    fn symmetric_pa_verdicts_coincide(f in small_field(), seed in any::<u64>()) {
        let mut rng = tk::rng(seed);
        let p = pool_member(f, &mut rng);
        let random = tk::symmetric(f, p.dim(), &mut rng);
        let r = sample_or_hit(&SearchTarget::PaSym(&p), random, &mut rng);
        let res = pa_residuals(&p, &r).unwrap();
        let v: Vec<bool> = res.iter().map(|(_, t)| t.is_zero()).collect();
        prop_assert!(v.iter().all(|&b| b == v[0]), "{:?}", v);
        let op = yb_operator_check(&Ambient::PreAlternative(p.clone()), &r, YbMode::SymPa).unwrap().passed();
        prop_assert_eq!(v[0], op);
    }

    #[test]
    fn canonical_solutions_solve(f in small_field(), seed in any::<u64>()) {
        let p = pool_member(f, &mut tk::rng(seed));
        let minus = canonical_r(&p, CanonicalSign::Minus).unwrap();
        prop_assert!(aybe_residual(&minus.ambient().alternative(), minus.r(), AybeVariant::A1).unwrap().is_zero());
        let plus = canonical_r(&p, CanonicalSign::Plus).unwrap();
        prop_assert!(pa_residuals(plus.ambient().prealternative().unwrap(), plus.r()).unwrap().all_zero());
    }

    #[test]
    fn symmetric_coboundaries_are_compatible(seed in any::<u64>()) {
        let f = tk::gf(3);
        let mut rng = tk::rng(seed);
        let p = pool_member(f, &mut rng);
        let random = tk::symmetric(f, p.dim(), &mut rng);
        let r = sample_or_hit(&SearchTarget::PaSym(&p), random, &mut rng);
        let c = coboundary_comult(&p, &r).unwrap();
        let n = p.dim();
        for x in 0..n {
            for y in 0..n {
                prop_assert!(bialgebra_residuals(&p, &c, x, y).iter().all(Tensor2::is_zero));
            }
        }
        let cc = coboundary_condition_check(&p, &r).unwrap().passed();
        let bi = match bialgebra_check(&p, &c) {
            Ok(rep) => rep.passed(),
            Err(Error::NotCoalgebra) => false,
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        prop_assert_eq!(cc, bi);
        if bi {
            let b = PreAltBialgebra::new(p.clone(), c).unwrap();
            let twice = dual_bialgebra(&dual_bialgebra(&b));
            prop_assert_eq!(twice.comult(), b.comult());
            let pad = pad_double(&b).unwrap();
            let closed = pad_closed_form(&p, &r).unwrap();
            prop_assert_eq!(closed.prec().tensor(), pad.algebra().prec().tensor());
            prop_assert_eq!(closed.succ().tensor(), pad.algebra().succ().tensor());
        }
    }
}
