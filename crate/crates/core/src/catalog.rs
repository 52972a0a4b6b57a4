//! Built-in example algebras, available over any supported field.
//!
//! | name | kind | structure |
//! |---|---|---|
//! | `zero-<n>` | pre-alternative | all products zero |
//! | `n2` | alternative | `e1 e1 = e2` |
//! | `p2` | pre-alternative | `e1 ≺ e1 = e1 ≻ e1 = ½ e2`, the graded split of `n2` |
//! | `p3-graded` | pre-alternative | graded split of `x1 x1 = x2`, `x1 x2 = x2 x1 = x3` with degrees 1, 2, 3 |
//! | `octonion` | alternative | Cayley–Dickson octonions, `e0` the unit |
//! | `halved-idempotent` | pre-alternative | `e ≺ e = e ≻ e = ½ e`, which is not pre-alternative |
//! | `halved-field-negative` | alternative | the one-dimensional algebra `e e = e`, which has no nonzero Al-operator on its regular bimodule |
//!
//! Octonions: `e_i e_j = −δ_ij e0 + ε_ijk e_k` for `i, j ≥ 1`, where `ε` is
//! the totally antisymmetric symbol positive on the oriented triples in
//! [`FANO_TRIPLES`].

use crate::altalg::{default_labels, AlternativeAlgebra};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::prealt::PreAlternativeAlgebra;
use crate::tensor::Tensor3;

pub const FANO_TRIPLES: [(usize, usize, usize); 7] =
    [(1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5)];

pub const NAMES: [&str; 7] =
    ["zero-n", "n2", "p2", "p3-graded", "octonion", "halved-idempotent", "halved-field-negative"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogEntry {
    Alternative(AlternativeAlgebra),
    PreAlternative(PreAlternativeAlgebra),
}

pub fn n2(f: FieldSpec) -> AlternativeAlgebra {
    AlternativeAlgebra::from_tensor(Tensor3::from_entries(f, 2, [(0, 0, 1, f.one())]).expect("in range"))
}

pub fn p2(f: FieldSpec) -> PreAlternativeAlgebra {
    let half = f.ratio(1, 2).expect("odd characteristic");
    let t = Tensor3::from_entries(f, 2, [(0, 0, 1, half)]).expect("in range");
    PreAlternativeAlgebra::from_tensors(t.clone(), t).expect("shapes agree")
}

/// The truncated polynomial algebra `x, x², x³` with `x_i x_j = x_{i+j}`.
pub fn n3(f: FieldSpec) -> AlternativeAlgebra {
    let t =
        Tensor3::from_entries(f, 3, [(0, 0, 1, f.one()), (0, 1, 2, f.one()), (1, 0, 2, f.one())]).expect("in range");
    AlternativeAlgebra::from_tensor(t).with_labels(default_labels("x", 3)).expect("three labels")
}

/// `x_i ≻ x_j = j/(i+j) x_i x_j`, `x_i ≺ x_j = i/(i+j) x_i x_j`; needs
/// characteristic other than 2 and 3.
pub fn p3_graded(f: FieldSpec) -> Result<PreAlternativeAlgebra> {
    let w = |n, d| f.ratio(n, d);
    let prec = Tensor3::from_entries(f, 3, [(0, 0, 1, w(1, 2)?), (0, 1, 2, w(1, 3)?), (1, 0, 2, w(2, 3)?)])?;
    let succ = Tensor3::from_entries(f, 3, [(0, 0, 1, w(1, 2)?), (0, 1, 2, w(2, 3)?), (1, 0, 2, w(1, 3)?)])?;
    PreAlternativeAlgebra::new(f, default_labels("x", 3), prec, succ)
}

pub fn octonions(f: FieldSpec) -> AlternativeAlgebra {
    let mut t = Tensor3::zeros(f, 8);
    for i in 0..8 {
        t.set(0, i, i, f.one());
        t.set(i, 0, i, f.one());
    }
    for i in 1..8 {
        t.set(i, i, 0, -f.one());
    }
    for (a, b, c) in FANO_TRIPLES {
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            t.set(x, y, z, f.one());
            t.set(y, x, z, -f.one());
        }
    }
    let labels = (0..8).map(|i| format!("e{i}")).collect();
    AlternativeAlgebra::new(f, labels, t).expect("eight labels")
}

pub fn halved_idempotent(f: FieldSpec) -> PreAlternativeAlgebra {
    let half = f.ratio(1, 2).expect("odd characteristic");
    let t = Tensor3::from_entries(f, 1, [(0, 0, 0, half)]).expect("in range");
    PreAlternativeAlgebra::new(f, vec!["e".into()], t.clone(), t).expect("one label")
}

pub fn halved_field_negative(f: FieldSpec) -> AlternativeAlgebra {
    let t = Tensor3::from_entries(f, 1, [(0, 0, 0, f.one())]).expect("in range");
    AlternativeAlgebra::new(f, vec!["e".into()], t).expect("one label")
}

/// Looks up `name`; `zero-<n>` accepts any dimension.
pub fn by_name(name: &str, f: FieldSpec) -> Result<CatalogEntry> {
    if let Some(n) = name.strip_prefix("zero-") {
        let n: usize = n.parse().map_err(|_| Error::UnknownName(name.to_string()))?;
        return Ok(CatalogEntry::PreAlternative(PreAlternativeAlgebra::zero(f, n)));
    }
    Ok(match name {
        "n2" => CatalogEntry::Alternative(n2(f)),
        "p2" => CatalogEntry::PreAlternative(p2(f)),
        "p3-graded" => CatalogEntry::PreAlternative(p3_graded(f)?),
        "octonion" => CatalogEntry::Alternative(octonions(f)),
        "halved-idempotent" => CatalogEntry::PreAlternative(halved_idempotent(f)),
        "halved-field-negative" => CatalogEntry::Alternative(halved_field_negative(f)),
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::altalg::{check_alternative, check_associative};
    use crate::construct::{graded_split, Grading};
    use crate::prealt::{associated_algebra, check_prealternative};

    #[test]
    fn octonions_alternative_not_associative() {
        let o = octonions(FieldSpec::Rationals);
        assert!(check_alternative(&o).passed());
        assert!(!check_associative(&o).passed());
        let g3 = octonions(FieldSpec::prime(3).unwrap());
        assert!(check_alternative(&g3).passed());
    }

    #[test]
    fn graded_entries_match_graded_split() {
        let f = FieldSpec::Rationals;
        let g = Grading::new(vec![1, 2, 3]).unwrap();
        let split = graded_split(&n3(f), &g).unwrap();
        let p3 = p3_graded(f).unwrap();
        assert_eq!(split.prec(), p3.prec());
        assert_eq!(split.succ(), p3.succ());
        assert!(check_prealternative(&p3).passed());
        assert_eq!(associated_algebra(&p2(f)).tensor(), n2(f).tensor());
        assert!(p3_graded(FieldSpec::prime(3).unwrap()).is_err());
    }

    #[test]
    fn halved_idempotent_fails() {
        let rep = check_prealternative(&halved_idempotent(FieldSpec::Rationals));
        assert!(rep.fails("pa.r.sym"));
        assert!(matches!(by_name("nope", FieldSpec::Rationals), Err(Error::UnknownName(_))));
        assert!(matches!(by_name("zero-3", FieldSpec::Rationals), Ok(CatalogEntry::PreAlternative(p)) if p.dim() == 3));
    }
}
