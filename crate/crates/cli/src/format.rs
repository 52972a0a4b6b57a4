//! The JSON file format for algebras and attached data.
//!
//! Indices are 0-based. Rational scalars are written as strings (`"1/2"`),
//! prime-field scalars as integers in `[0, p)`; on input either form is
//! accepted as long as it parses in the declared field.
//!
//! Sections:
//!
//! - `products.mult` for an alternative algebra, or `products.prec` and
//!   `products.succ` for a pre-alternative one; entries `[i, j, k, c]`
//!   mean `e_i ⋆ e_j` has coefficient `c` on `e_k`.
//! - `alpha`, `beta` (a comultiplication pair) or `delta` (a single
//!   comultiplication); entries `[i, j, k, c]` mean `Δ(e_i)` has
//!   coefficient `c` on `e_j ⊗ e_k`.
//! - `r`: a 2-tensor, entries `[i, j, c]` on `e_i ⊗ e_j`.
//! - `form`: a bilinear form, entries `[i, j, c]` for `B(e_i, e_j)`.
//! - `actions`: a bimodule on a space with basis `actions.basis`; entries
//!   `[x, i, j, c]` are the `(i, j)` matrix entry of the operator of
//!   `e_x`. Alternative bimodules use `left`/`right`, pre-alternative ones
//!   `prec_left`, `prec_right`, `succ_left`, `succ_right`.
//! - `map`: a linear map given by `rows`, `cols` and entries `[i, j, c]`.

use serde::{Deserialize, Serialize};

use prealt_core::altalg::{AltBimoduleAction, AlternativeAlgebra};
use prealt_core::bialg::ComultiplicationPair;
use prealt_core::prealt::{PreAltBimoduleAction, PreAlternativeAlgebra};
use prealt_core::{BilinearForm, FieldSpec, Matrix, Scalar, Tensor2, Tensor3};

use crate::error::{CliError, Result};

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldJson {
    Q,
    Fp(u32),
}

impl FieldJson {
    pub fn field_spec(&self) -> Result<FieldSpec> {
        match self {
            FieldJson::Q => Ok(FieldSpec::Rationals),
            FieldJson::Fp(p) => Ok(FieldSpec::prime(*p)?),
        }
    }

    pub fn of(f: FieldSpec) -> Self {
        match f {
            FieldSpec::Rationals => FieldJson::Q,
            FieldSpec::Prime(p) => FieldJson::Fp(p),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Int(i64),
    Str(String),
}

impl ScalarJson {
    pub fn of(s: &Scalar) -> Self {
        match s.residue() {
            Some(v) => ScalarJson::Int(v as i64),
            None => ScalarJson::Str(s.to_string()),
        }
    }

    pub fn parse(&self, f: FieldSpec) -> Result<Scalar> {
        match (self, f) {
            (ScalarJson::Int(n), FieldSpec::Prime(p)) if *n < 0 || *n >= p as i64 => {
                Err(CliError::Format(format!("{n} is not a residue in [0, {p})")))
            }
            (ScalarJson::Int(n), _) => Ok(f.int(*n)),
            (ScalarJson::Str(s), _) => Ok(f.parse(s)?),
        }
    }
}

pub type Entry2 = (usize, usize, ScalarJson);
pub type Entry3 = (usize, usize, usize, ScalarJson);

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Products {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prec: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub succ: Option<Vec<Entry3>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Actions {
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prec_left: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prec_right: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub succ_left: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub succ_right: Option<Vec<Entry3>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSection {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Entry2>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub format_version: String,
    pub field: FieldJson,
    pub dim: usize,
    pub basis: Vec<String>,
    pub products: Products,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Vec<Entry2>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<Entry2>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub actions: Option<Actions>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<MapSection>,
}

/// The algebra a file describes.
#[derive(Clone, Debug)]
pub enum Structure {
    Alt(AlternativeAlgebra),
    PreAlt(PreAlternativeAlgebra),
}

impl Structure {
    pub fn dim(&self) -> usize {
        match self {
            Structure::Alt(a) => a.dim(),
            Structure::PreAlt(p) => p.dim(),
        }
    }

    /// The algebra itself, or the associated alternative algebra.
    pub fn alternative(&self) -> AlternativeAlgebra {
        match self {
            Structure::Alt(a) => a.clone(),
            Structure::PreAlt(p) => prealt_core::prealt::associated_algebra(p),
        }
    }

    pub fn prealternative(&self) -> Result<&PreAlternativeAlgebra> {
        match self {
            Structure::PreAlt(p) => Ok(p),
            Structure::Alt(_) => Err(CliError::Usage("this needs a pre-alternative file (products.prec/succ)".into())),
        }
    }
}

fn sparse3(t: &Tensor3) -> Vec<Entry3> {
    t.nonzero().map(|(i, j, k, c)| (i, j, k, ScalarJson::of(c))).collect()
}

fn sparse2(n: usize, get: impl Fn(usize, usize) -> Scalar) -> Vec<Entry2> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = get(i, j);
            if !c.is_zero() {
                out.push((i, j, ScalarJson::of(&c)));
            }
        }
    }
    out
}

fn family_entries(fam: &[Matrix]) -> Vec<Entry3> {
    let mut out = Vec::new();
    for (x, m) in fam.iter().enumerate() {
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let c = m.get(i, j);
                if !c.is_zero() {
                    out.push((x, i, j, ScalarJson::of(c)));
                }
            }
        }
    }
    out
}

impl AlgebraFile {
    fn empty(f: FieldSpec, labels: &[String]) -> Self {
        AlgebraFile {
            format_version: FORMAT_VERSION.into(),
            field: FieldJson::of(f),
            dim: labels.len(),
            basis: labels.to_vec(),
            products: Products::default(),
            alpha: None,
            beta: None,
            delta: None,
            form: None,
            r: None,
            actions: None,
            map: None,
        }
    }

    pub fn from_alt(a: &AlternativeAlgebra) -> Self {
        let mut file = Self::empty(a.field(), a.labels());
        file.products.mult = Some(sparse3(a.tensor()));
        file
    }

    pub fn from_prealt(p: &PreAlternativeAlgebra) -> Self {
        let mut file = Self::empty(p.field(), p.labels());
        file.products.prec = Some(sparse3(p.prec().tensor()));
        file.products.succ = Some(sparse3(p.succ().tensor()));
        file
    }

    pub fn from_structure(s: &Structure) -> Self {
        match s {
            Structure::Alt(a) => Self::from_alt(a),
            Structure::PreAlt(p) => Self::from_prealt(p),
        }
    }

    pub fn with_r(mut self, r: &Tensor2) -> Self {
        self.r = Some(sparse2(r.dim(), |i, j| r.get(i, j).clone()));
        self
    }

    pub fn with_form(mut self, b: &BilinearForm) -> Self {
        self.form = Some(sparse2(b.dim(), |i, j| b.get(i, j).clone()));
        self
    }

    pub fn with_comult(mut self, c: &ComultiplicationPair) -> Self {
        self.alpha = Some(sparse3(c.alpha()));
        self.beta = Some(sparse3(c.beta()));
        self
    }

    pub fn with_delta(mut self, d: &Tensor3) -> Self {
        self.delta = Some(sparse3(d));
        self
    }

    pub fn with_alt_action(mut self, act: &AltBimoduleAction) -> Self {
        self.actions = Some(Actions {
            basis: act.labels().to_vec(),
            left: Some(family_entries(act.left_family())),
            right: Some(family_entries(act.right_family())),
            ..Actions::default()
        });
        self
    }

    pub fn with_prealt_action(mut self, act: &PreAltBimoduleAction) -> Self {
        let [lp, rp, ls, rs] = act.families();
        self.actions = Some(Actions {
            basis: act.labels().to_vec(),
            prec_left: Some(family_entries(lp)),
            prec_right: Some(family_entries(rp)),
            succ_left: Some(family_entries(ls)),
            succ_right: Some(family_entries(rs)),
            ..Actions::default()
        });
        self
    }

    pub fn with_map(mut self, m: &Matrix) -> Self {
        let mut entries = Vec::new();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let c = m.get(i, j);
                if !c.is_zero() {
                    entries.push((i, j, ScalarJson::of(c)));
                }
            }
        }
        self.map = Some(MapSection { rows: m.rows(), cols: m.cols(), entries });
        self
    }

    pub fn parse(text: &str) -> Result<Self> {
        let file: AlgebraFile = serde_json::from_str(text)?;
        file.validate()?;
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    /// Everything that can be checked without building the algebra.
    pub fn validate(&self) -> Result<()> {
        if self.format_version != FORMAT_VERSION {
            return Err(CliError::Format(format!(
                "unsupported format_version {:?}, expected {FORMAT_VERSION:?}",
                self.format_version
            )));
        }
        if self.basis.len() != self.dim {
            return Err(CliError::Format(format!("{} basis labels for dim {}", self.basis.len(), self.dim)));
        }
        let p = &self.products;
        match (&p.mult, &p.prec, &p.succ) {
            (Some(_), None, None) | (None, Some(_), Some(_)) => {}
            _ => {
                return Err(CliError::Format("products must hold either mult, or both prec and succ".into()));
            }
        }
        if self.alpha.is_some() != self.beta.is_some() {
            return Err(CliError::Format("alpha and beta come together".into()));
        }
        // building every section checks ranges and scalars
        self.structure()?;
        self.comult()?;
        self.delta()?;
        self.form()?;
        self.r()?;
        self.map()?;
        if let Some(a) = &self.actions {
            let alt = a.left.is_some() || a.right.is_some();
            let pre =
                a.prec_left.is_some() || a.prec_right.is_some() || a.succ_left.is_some() || a.succ_right.is_some();
            if alt && pre {
                return Err(CliError::Format("actions mix alternative and pre-alternative families".into()));
            }
            if alt {
                self.alt_action()?;
            } else {
                self.prealt_action()?;
            }
        }
        Ok(())
    }

    pub fn field_spec(&self) -> Result<FieldSpec> {
        self.field.field_spec()
    }

    fn cube(&self, entries: &[Entry3]) -> Result<Tensor3> {
        let f = self.field_spec()?;
        let parsed = entries.iter().map(|(i, j, k, c)| Ok((*i, *j, *k, c.parse(f)?))).collect::<Result<Vec<_>>>()?;
        Ok(Tensor3::from_entries(f, self.dim, parsed)?)
    }

    fn square(&self, n: usize, entries: &[Entry2]) -> Result<Vec<Vec<Scalar>>> {
        let f = self.field_spec()?;
        let mut m = vec![vec![f.zero(); n]; n];
        for (i, j, c) in entries {
            if *i >= n || *j >= n {
                return Err(CliError::Format(format!("index ({i},{j}) out of range for dimension {n}")));
            }
            m[*i][*j] += c.parse(f)?;
        }
        Ok(m)
    }

    pub fn structure(&self) -> Result<Structure> {
        let f = self.field_spec()?;
        let p = &self.products;
        if let Some(mult) = &p.mult {
            return Ok(Structure::Alt(AlternativeAlgebra::new(f, self.basis.clone(), self.cube(mult)?)?));
        }
        match (&p.prec, &p.succ) {
            (Some(prec), Some(succ)) => Ok(Structure::PreAlt(PreAlternativeAlgebra::new(
                f,
                self.basis.clone(),
                self.cube(prec)?,
                self.cube(succ)?,
            )?)),
            _ => Err(CliError::Format("products must hold either mult, or both prec and succ".into())),
        }
    }

    pub fn comult(&self) -> Result<Option<ComultiplicationPair>> {
        match (&self.alpha, &self.beta) {
            (Some(a), Some(b)) => Ok(Some(ComultiplicationPair::new(self.cube(a)?, self.cube(b)?)?)),
            _ => Ok(None),
        }
    }

    pub fn delta(&self) -> Result<Option<Tensor3>> {
        self.delta.as_deref().map(|d| self.cube(d)).transpose()
    }

    pub fn r(&self) -> Result<Option<Tensor2>> {
        let f = self.field_spec()?;
        let Some(entries) = &self.r else { return Ok(None) };
        let m = self.square(self.dim, entries)?;
        Ok(Some(Tensor2::from_fn(f, self.dim, |i, j| m[i][j].clone())))
    }

    pub fn form(&self) -> Result<Option<BilinearForm>> {
        let f = self.field_spec()?;
        let Some(entries) = &self.form else { return Ok(None) };
        let m = self.square(self.dim, entries)?;
        Ok(Some(BilinearForm::from_fn(f, self.dim, |i, j| m[i][j].clone())))
    }

    pub fn map(&self) -> Result<Option<Matrix>> {
        let f = self.field_spec()?;
        let Some(sec) = &self.map else { return Ok(None) };
        let mut m = Matrix::zeros(f, sec.rows, sec.cols);
        for (i, j, c) in &sec.entries {
            if *i >= sec.rows || *j >= sec.cols {
                return Err(CliError::Format(format!("map index ({i},{j}) out of range")));
            }
            let v = m.get(*i, *j).clone() + c.parse(f)?;
            m.set(*i, *j, v);
        }
        Ok(Some(m))
    }

    fn family(&self, basis: &[String], entries: Option<&Vec<Entry3>>) -> Result<Vec<Matrix>> {
        let f = self.field_spec()?;
        let m = basis.len();
        let mut fam = vec![Matrix::zeros(f, m, m); self.dim];
        for (x, i, j, c) in entries.map(Vec::as_slice).unwrap_or_default() {
            if *x >= self.dim || *i >= m || *j >= m {
                return Err(CliError::Format(format!("action index ({x},{i},{j}) out of range")));
            }
            let v = fam[*x].get(*i, *j).clone() + c.parse(f)?;
            fam[*x].set(*i, *j, v);
        }
        Ok(fam)
    }

    fn actions_section(&self) -> Result<&Actions> {
        self.actions.as_ref().ok_or(CliError::MissingSection("actions"))
    }

    pub fn alt_action(&self) -> Result<AltBimoduleAction> {
        let a = self.actions_section()?;
        Ok(AltBimoduleAction::new(
            self.field_spec()?,
            a.basis.clone(),
            self.family(&a.basis, a.left.as_ref())?,
            self.family(&a.basis, a.right.as_ref())?,
        )?)
    }

    pub fn prealt_action(&self) -> Result<PreAltBimoduleAction> {
        let a = self.actions_section()?;
        Ok(PreAltBimoduleAction::new(
            self.field_spec()?,
            a.basis.clone(),
            self.family(&a.basis, a.prec_left.as_ref())?,
            self.family(&a.basis, a.prec_right.as_ref())?,
            self.family(&a.basis, a.succ_left.as_ref())?,
            self.family(&a.basis, a.succ_right.as_ref())?,
        )?)
    }

    pub fn require_r(&self) -> Result<Tensor2> {
        self.r()?.ok_or(CliError::MissingSection("r"))
    }

    pub fn require_form(&self) -> Result<BilinearForm> {
        self.form()?.ok_or(CliError::MissingSection("form"))
    }

    pub fn require_comult(&self) -> Result<ComultiplicationPair> {
        self.comult()?.ok_or(CliError::MissingSection("alpha/beta"))
    }

    pub fn require_delta(&self) -> Result<Tensor3> {
        self.delta()?.ok_or(CliError::MissingSection("delta"))
    }

    pub fn require_map(&self) -> Result<Matrix> {
        self.map()?.ok_or(CliError::MissingSection("map"))
    }
}
