//! JSON documents for algebras, weak bialgebras, bialgebroids, morphisms,
//! actions, number fields and subspaces.
//!
//! Rationals are strings `"p/q"` (or `"p"`), matrices row-major nested arrays.
//! Fields that reference another document accept either a relative file path
//! or the document inlined.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::algebra::FinDimAlgebra;
use crate::bialgebroid::LeftBialgebroid;
use crate::error::Error;
use crate::field::NumberField;
use crate::linear::tensor::nonzeros;
use crate::linear::{Matrix, Rational, Subspace, Vector};
use crate::morphism::ModuleAlgebraAction;
use crate::poly::Polynomial;
use crate::wba::{WeakBialgebra, WeakHopfAlgebra};

/// A malformed or unreadable document, with the place it was found.
#[derive(Debug)]
pub struct DocError {
    pub location: String,
    pub message: String,
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

impl std::error::Error for DocError {}

impl DocError {
    fn new(location: impl Into<String>, message: impl fmt::Display) -> Self {
        DocError {
            location: location.into(),
            message: message.to_string(),
        }
    }

    fn at(self, outer: &str) -> Self {
        DocError {
            location: format!("{outer}: {}", self.location),
            message: self.message,
        }
    }
}

pub type DocResult<T> = std::result::Result<T, DocError>;

fn invalid(field: &str, e: Error) -> DocError {
    DocError::new(field, e)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub dim: usize,
    pub mult: Vec<Vec<Vector>>,
    pub unit: Vector,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
}

impl From<&FinDimAlgebra> for AlgebraDoc {
    fn from(a: &FinDimAlgebra) -> Self {
        AlgebraDoc {
            dim: a.dim(),
            mult: a.mult_table().to_vec(),
            unit: a.unit().clone(),
            basis_names: a.basis_names().map(<[String]>::to_vec),
        }
    }
}

impl AlgebraDoc {
    pub fn to_algebra(&self) -> DocResult<FinDimAlgebra> {
        if self.unit.len() != self.dim {
            return Err(DocError::new("unit", format!("length {} but dim is {}", self.unit.len(), self.dim)));
        }
        let a = FinDimAlgebra::new(self.mult.clone(), self.unit.clone()).map_err(|e| invalid("mult", e))?;
        match &self.basis_names {
            Some(names) if names.len() != self.dim => {
                Err(DocError::new("basis_names", format!("{} names for dimension {}", names.len(), self.dim)))
            }
            Some(names) => Ok(a.with_basis_names(names.clone())),
            None => Ok(a),
        }
    }
}

/// One term `c·e_i⊗e_j` of a sparse coproduct.
pub type DeltaTerm = (usize, usize, Rational);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WbaDoc {
    pub dim: usize,
    pub mult: Vec<Vec<Vector>>,
    pub unit: Vector,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
    /// Entry `b` lists the terms of `Δ(e_b)`.
    pub delta: Vec<Vec<DeltaTerm>>,
    pub epsilon: Vector,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Matrix>,
}

impl WbaDoc {
    pub fn from_wba(w: &WeakBialgebra, antipode: Option<&Matrix>) -> Self {
        let n = w.dim();
        let alg = AlgebraDoc::from(w.algebra());
        WbaDoc {
            dim: alg.dim,
            mult: alg.mult,
            unit: alg.unit,
            basis_names: alg.basis_names,
            delta: (0..n)
                .map(|b| {
                    nonzeros(w.coproduct_of_basis(b))
                        .map(|(k, c)| (k / n, k % n, c.clone()))
                        .collect()
                })
                .collect(),
            epsilon: w.epsilon().clone(),
            antipode: antipode.cloned(),
        }
    }

    pub fn from_wha(h: &WeakHopfAlgebra) -> Self {
        Self::from_wba(&h.wba, Some(&h.antipode))
    }

    pub fn algebra_doc(&self) -> AlgebraDoc {
        AlgebraDoc {
            dim: self.dim,
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            basis_names: self.basis_names.clone(),
        }
    }

    pub fn to_wba(&self) -> DocResult<WeakBialgebra> {
        let n = self.dim;
        let alg = self.algebra_doc().to_algebra()?;
        if self.delta.len() != n {
            return Err(DocError::new("delta", format!("{} entries for dimension {n}", self.delta.len())));
        }
        let mut coproducts = Vec::with_capacity(n);
        for (b, terms) in self.delta.iter().enumerate() {
            let mut v = vec![Rational::zero(); n * n];
            for (t, (i, j, c)) in terms.iter().enumerate() {
                if *i >= n || *j >= n {
                    return Err(DocError::new(format!("delta[{b}][{t}]"), format!("index ({i}, {j}) out of range")));
                }
                v[i * n + j] += c;
            }
            coproducts.push(v);
        }
        WeakBialgebra::from_coproducts(alg, &coproducts, self.epsilon.clone()).map_err(|e| invalid("epsilon", e))
    }

    pub fn to_wha(&self) -> DocResult<Option<WeakHopfAlgebra>> {
        let w = self.to_wba()?;
        match &self.antipode {
            Some(s) => WeakHopfAlgebra::new(w, s.clone()).map(Some).map_err(|e| invalid("antipode", e)),
            None => Ok(None),
        }
    }
}

/// A field holding either a relative path or an inlined document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DocRef {
    Path(String),
    Inline(serde_json::Value),
}

impl DocRef {
    pub fn inline<T: Serialize>(doc: &T) -> Self {
        DocRef::Inline(serde_json::to_value(doc).expect("documents serialize"))
    }

    /// Resolves against the directory of the referring document.
    pub fn resolve<T: DeserializeOwned>(&self, base: Option<&Path>, field: &str) -> DocResult<T> {
        match self {
            DocRef::Path(p) => {
                let path = match base {
                    Some(dir) => dir.join(p),
                    None => PathBuf::from(p),
                };
                read_doc(&path).map_err(|e| e.at(field))
            }
            DocRef::Inline(v) => T::deserialize(v).map_err(|e| DocError::new(field, e)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BialgebroidDoc {
    /// Algebra document of `A`.
    pub total: DocRef,
    /// Algebra document of `R`.
    pub base: DocRef,
    pub s: Matrix,
    pub t: Matrix,
    pub gamma_representative: Matrix,
    pub pi: Matrix,
}

impl BialgebroidDoc {
    pub fn from_bialgebroid(b: &LeftBialgebroid) -> Self {
        BialgebroidDoc {
            total: DocRef::inline(&AlgebraDoc::from(&b.total)),
            base: DocRef::inline(&AlgebraDoc::from(&b.base)),
            s: b.s.clone(),
            t: b.t.clone(),
            gamma_representative: b.gamma_rep.clone(),
            pi: b.pi.clone(),
        }
    }

    pub fn to_bialgebroid(&self, dir: Option<&Path>) -> DocResult<LeftBialgebroid> {
        let total: AlgebraDoc = self.total.resolve(dir, "total")?;
        let base: AlgebraDoc = self.base.resolve(dir, "base")?;
        let total = total.to_algebra().map_err(|e| e.at("total"))?;
        let base = base.to_algebra().map_err(|e| e.at("base"))?;
        LeftBialgebroid::new(
            total,
            base,
            self.s.clone(),
            self.t.clone(),
            self.gamma_representative.clone(),
            self.pi.clone(),
        )
        .map_err(|e| DocError::new("shape", e))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MorphismKind {
    Strict,
    WeakLeft,
    WeakRight,
    Bialgebroid,
}

impl MorphismKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MorphismKind::Strict => "strict",
            MorphismKind::WeakLeft => "weak-left",
            MorphismKind::WeakRight => "weak-right",
            MorphismKind::Bialgebroid => "bialgebroid",
        }
    }
}

/// `domain` and `codomain` are WBA documents, or bialgebroid documents when
/// `kind` is `bialgebroid`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub matrix: Matrix,
    pub domain: DocRef,
    pub codomain: DocRef,
    pub kind: MorphismKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NumberFieldDoc {
    /// Coefficients from the constant term up.
    pub min_poly: Vector,
}

impl From<&NumberField> for NumberFieldDoc {
    fn from(f: &NumberField) -> Self {
        NumberFieldDoc {
            min_poly: f.min_poly().coeffs().to_vec(),
        }
    }
}

impl NumberFieldDoc {
    pub fn to_field(&self) -> DocResult<NumberField> {
        NumberField::new(Polynomial::new(self.min_poly.clone())).map_err(|e| invalid("min_poly", e))
    }
}

/// A subspace by a basis given as rows. `ambient` is needed only when the
/// basis is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceDoc {
    pub basis: Matrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient: Option<usize>,
}

impl From<&Subspace> for SubspaceDoc {
    fn from(s: &Subspace) -> Self {
        SubspaceDoc {
            basis: s.basis().clone(),
            ambient: Some(s.ambient_dim()),
        }
    }
}

impl SubspaceDoc {
    pub fn to_subspace(&self, expected_ambient: Option<usize>) -> DocResult<Subspace> {
        let ambient = match (self.basis.rows(), self.ambient, expected_ambient) {
            (0, Some(a), _) | (0, None, Some(a)) => a,
            (0, None, None) => return Err(DocError::new("ambient", "required for an empty basis")),
            (_, _, _) => self.basis.cols(),
        };
        if let Some(a) = self.ambient.filter(|_| self.basis.rows() > 0) {
            if a != ambient {
                return Err(DocError::new("ambient", format!("{a} but basis rows have length {ambient}")));
            }
        }
        if let Some(want) = expected_ambient {
            if want != ambient {
                return Err(DocError::new("basis", format!("vectors of length {ambient}, expected {want}")));
            }
        }
        Ok(Subspace::span(ambient, self.basis.row_list()))
    }
}

/// A module-algebra action: column `w·dim M + m` of `action` is `e_w ▷ e_m`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    /// WBA document of the acting algebra.
    pub wba: DocRef,
    /// Algebra document, or a number-field document.
    pub algebra: DocRef,
    pub action: Matrix,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AlgebraOrField {
    Field(NumberFieldDoc),
    Algebra(AlgebraDoc),
}

/// A parsed action together with the antipode of the acting algebra and
/// the field it acts on, when given.
pub struct LoadedAction {
    pub action: ModuleAlgebraAction,
    pub antipode: Option<Matrix>,
    pub field: Option<NumberField>,
}

impl ActionDoc {
    pub fn from_action(action: &ModuleAlgebraAction, antipode: Option<&Matrix>, field: Option<&NumberField>) -> Self {
        let algebra = match field {
            Some(f) => DocRef::inline(&NumberFieldDoc::from(f)),
            None => DocRef::inline(&AlgebraDoc::from(&action.algebra)),
        };
        ActionDoc {
            wba: DocRef::inline(&WbaDoc::from_wba(&action.wba, antipode)),
            algebra,
            action: action.action.clone(),
        }
    }

    pub fn load(&self, dir: Option<&Path>) -> DocResult<LoadedAction> {
        let wdoc: WbaDoc = self.wba.resolve(dir, "wba")?;
        let wba = wdoc.to_wba().map_err(|e| e.at("wba"))?;
        let (algebra, field) = match self.algebra.resolve::<AlgebraOrField>(dir, "algebra")? {
            AlgebraOrField::Field(f) => {
                let f = f.to_field().map_err(|e| e.at("algebra"))?;
                (f.algebra().clone(), Some(f))
            }
            AlgebraOrField::Algebra(a) => (a.to_algebra().map_err(|e| e.at("algebra"))?, None),
        };
        let action = ModuleAlgebraAction::new(wba, algebra, self.action.clone()).map_err(|e| invalid("action", e))?;
        Ok(LoadedAction {
            action,
            antipode: wdoc.antipode,
            field,
        })
    }
}

pub fn parse_doc<T: DeserializeOwned>(text: &str, location: &str) -> DocResult<T> {
    serde_json::from_str(text)
        .map_err(|e| DocError::new(format!("{location}:{}:{}", e.line(), e.column()), e))
}

pub fn read_doc<T: DeserializeOwned>(path: &Path) -> DocResult<T> {
    let text = fs::read_to_string(path).map_err(|e| DocError::new(path.display().to_string(), e))?;
    parse_doc(&text, &path.display().to_string())
}

/// Pretty JSON with a trailing newline; stable for equal inputs.
pub fn emit_doc<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn write_doc<T: Serialize>(path: &Path, doc: &T) -> DocResult<()> {
    fs::write(path, emit_doc(doc)).map_err(|e| DocError::new(path.display().to_string(), e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::UniversalWha;
    use crate::linear::qi;

    fn round_trip<T: Serialize + DeserializeOwned + PartialEq + fmt::Debug>(doc: &T) {
        let text = emit_doc(doc);
        let back: T = parse_doc(&text, "mem").unwrap();
        assert_eq!(&back, doc);
        assert_eq!(emit_doc(&back), text);
    }

    #[test]
    fn wba_round_trip() {
        let h = WeakHopfAlgebra::cyclic_group(3);
        let doc = WbaDoc::from_wha(&h);
        round_trip(&doc);
        let back = doc.to_wha().unwrap().unwrap();
        assert_eq!(back.wba, h.wba);
        assert_eq!(back.antipode, h.antipode);
    }

    #[test]
    fn universal_round_trip() {
        let a = UniversalWha::from_poly("x^2-2").unwrap();
        let doc = WbaDoc::from_wha(&a.wha);
        assert_eq!(doc.to_wba().unwrap(), a.wha.wba);
        let f = NumberFieldDoc::from(&a.field);
        round_trip(&f);
        assert_eq!(f.min_poly, vec![qi(-2), qi(0), qi(1)]);
        assert_eq!(f.to_field().unwrap().min_poly(), a.field.min_poly());
    }

    #[test]
    fn bialgebroid_round_trip() {
        let w = WeakHopfAlgebra::cyclic_group(2).wba;
        let b = crate::bialgebroid::beta_l(&w);
        let doc = BialgebroidDoc::from_bialgebroid(&b);
        round_trip(&doc);
        let back = doc.to_bialgebroid(None).unwrap();
        assert_eq!(back.total, b.total);
        assert_eq!(back.gamma_rep, b.gamma_rep);
    }

    #[test]
    fn subspace_round_trip() {
        let s = Subspace::span(3, vec![vec![qi(1), qi(2), qi(0)]]);
        let doc = SubspaceDoc::from(&s);
        round_trip(&doc);
        assert_eq!(doc.to_subspace(Some(3)).unwrap(), s);
        assert!(doc.to_subspace(Some(4)).is_err());
        let z = SubspaceDoc::from(&Subspace::zero(5));
        assert_eq!(z.to_subspace(None).unwrap(), Subspace::zero(5));
    }

    #[test]
    fn errors_carry_location() {
        let e = parse_doc::<AlgebraDoc>("{\"dim\": 1,\n \"mult\": [[[\"x\"]]], \"unit\": [\"1\"]}", "f.json").unwrap_err();
        assert!(e.location.starts_with("f.json:2:"), "{e}");
        let e = parse_doc::<AlgebraDoc>("{\"dim\": 1, \"mult\": [[[\"1\"]]], \"unit\": [\"1\"], \"extra\": 0}", "f.json");
        assert!(e.is_err());
        let bad = WbaDoc {
            delta: vec![vec![(0, 3, qi(1))]],
            ..WbaDoc::from_wba(&WeakHopfAlgebra::cyclic_group(1).wba, None)
        };
        assert_eq!(bad.to_wba().unwrap_err().location, "delta[0][0]");
    }
}
