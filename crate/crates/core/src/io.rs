//! Input specs, named generators and JSON renderings.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::braided_space::{BracketMap, BraidedSpace, HeckeReport, Marks};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{FieldSpec, Scalar};
use crate::tensor_engine::{BialgebraJson, TruncatedBraidedBialgebra};

/// A scalar written either as a JSON integer or as a string such as `"3/4"` or `"g^2+1"`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum JsonScalar {
    Int(i64),
    Text(String),
}

impl JsonScalar {
    pub fn parse(&self, field: FieldSpec) -> Result<Scalar> {
        match self {
            JsonScalar::Int(v) => Ok(field.from_i64(*v)),
            JsonScalar::Text(s) => field.parse_scalar(s),
        }
    }
}

/// `{"field": "Q", "dim": n, "c": [n⁴ scalars], "bracket": [n³ scalars]}`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceSpec {
    #[serde(default = "default_field")]
    pub field: String,
    pub dim: usize,
    pub c: Vec<JsonScalar>,
    #[serde(default)]
    pub bracket: Option<Vec<JsonScalar>>,
}

fn default_field() -> String {
    "Q".into()
}

/// A braided space with an optional bracket, as read from a JSON file.
#[derive(Clone, Debug)]
pub struct SpaceInput {
    pub space: BraidedSpace,
    pub bracket: Option<BracketMap>,
}

fn parse_all(values: &[JsonScalar], field: FieldSpec) -> Result<Vec<Scalar>> {
    values.iter().map(|v| v.parse(field)).collect()
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(format!("{e} (line {}, column {})", e.line(), e.column()))
}

impl SpaceSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(json_error)
    }

    pub fn build(&self) -> Result<SpaceInput> {
        self.build_with(true)
    }

    /// Like [`SpaceSpec::build`], optionally skipping the braid equation.
    pub fn build_with(&self, check: bool) -> Result<SpaceInput> {
        let field = FieldSpec::parse(&self.field)?;
        let n = self.dim;
        let entries = parse_all(&self.c, field)?;
        let c = Matrix::from_dense(field, n * n, n * n, &entries)?;
        let space = if check {
            BraidedSpace::new(field, n, c)?
        } else {
            BraidedSpace::new_unchecked(field, n, c)?
        };
        let bracket = match &self.bracket {
            Some(values) => Some(BracketMap::from_flat(field, n, &parse_all(values, field)?)?),
            None => None,
        };
        Ok(SpaceInput { space, bracket })
    }
}

/// Either a braided space or a truncated bialgebra, told apart by their keys.
#[derive(Clone, Debug)]
pub enum Input {
    Space(SpaceInput),
    Bialgebra(TruncatedBraidedBialgebra),
}

pub fn parse_input(text: &str) -> Result<Input> {
    parse_input_with(text, true)
}

/// Like [`parse_input`]; `check = false` accepts a matrix failing the braid equation.
pub fn parse_input_with(text: &str, check: bool) -> Result<Input> {
    let value: Value = serde_json::from_str(text).map_err(json_error)?;
    if value.get("dims").is_some() {
        let json: BialgebraJson = serde_json::from_str(text).map_err(json_error)?;
        Ok(Input::Bialgebra(TruncatedBraidedBialgebra::from_json(&json)?))
    } else {
        Ok(Input::Space(SpaceSpec::from_json(text)?.build_with(check)?))
    }
}

/// Parameters of the built-in generators.
#[derive(Clone, Debug, Default)]
pub struct GeneratorParams {
    pub n: Option<usize>,
    pub q: Option<String>,
    pub mu: Option<String>,
    pub q_matrix: Option<String>,
}

/// `flip`, `dj_hecke`, `scalar` and `diagonal`.
pub fn generate(name: &str, field: FieldSpec, params: &GeneratorParams) -> Result<BraidedSpace> {
    let need_n = || params.n.ok_or_else(|| Error::Parse(format!("generator {name} needs --n")));
    let scalar = |s: &Option<String>, flag: &str| -> Result<Scalar> {
        let s = s.as_ref().ok_or_else(|| Error::Parse(format!("generator {name} needs --{flag}")))?;
        field.parse_scalar(s)
    };
    match name {
        "flip" => Ok(BraidedSpace::flip(field, need_n()?)),
        "dj_hecke" => BraidedSpace::dj_hecke(field, need_n()?, &scalar(&params.q, "q")?),
        "scalar" => BraidedSpace::scalar(field, params.n.unwrap_or(1), &scalar(&params.mu, "mu")?),
        "diagonal" => {
            let text = params
                .q_matrix
                .as_ref()
                .ok_or_else(|| Error::Parse("generator diagonal needs --q-matrix".into()))?;
            let rows = text
                .split(';')
                .map(|row| row.split(',').map(|s| field.parse_scalar(s.trim())).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            BraidedSpace::diagonal(field, &rows)
        }
        other => Err(Error::Parse(format!("unknown generator {other}"))),
    }
}

/// `sl2`, `zero`, or a comma-separated list of `n³` scalars.
pub fn parse_bracket(text: &str, field: FieldSpec, n: usize) -> Result<BracketMap> {
    match text {
        "zero" => Ok(BracketMap::zero(field, n)),
        "sl2" if n == 3 => Ok(BracketMap::sl2(field)),
        "sl2" => Err(Error::Shape(format!("the sl2 bracket lives on dimension 3, not {n}"))),
        list => {
            let values = list.split(',').map(|s| field.parse_scalar(s.trim())).collect::<Result<Vec<_>>>()?;
            BracketMap::from_flat(field, n, &values)
        }
    }
}

pub fn scalar_strings(values: &[Scalar]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

pub fn hecke_json(report: &HeckeReport) -> Value {
    json!({
        "is_hecke": report.is_hecke,
        "marks": report.marks,
        "minimal_polynomial": scalar_strings(&report.minimal_polynomial),
    })
}

/// The mark to use when none is supplied: the unique one, if there is one.
pub fn default_mark(space: &BraidedSpace) -> Result<Scalar> {
    let report = space.hecke_analysis();
    match report.marks {
        Marks::Finite(marks) if marks.len() == 1 => Ok(marks[0].clone()),
        Marks::Finite(marks) if marks.is_empty() => {
            Err(Error::Precondition("the braiding is not of Hecke type".into()))
        }
        _ => Err(Error::Precondition("the mark is not determined by c; supply --lambda".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flip_from_json() {
        let text = r#"{"field": "F5", "dim": 1, "c": [1], "bracket": ["2"]}"#;
        let input = SpaceSpec::from_json(text).unwrap().build().unwrap();
        assert_eq!(input.space.dim(), 1);
        assert_eq!(input.bracket.unwrap().matrix().get(0, 0), FieldSpec::Prime(5).from_i64(2));
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let err = SpaceSpec::from_json(r#"{"dim": 1, "c": [1], "braid": []}"#).unwrap_err();
        assert!(matches!(err, Error::Parse(ref m) if m.contains("line 1")), "{err}");
    }

    #[test]
    fn broken_braiding_is_rejected() {
        let text = r#"{"dim": 2, "c": [1,1,0,0, 0,0,1,0, 0,1,0,0, 0,0,0,1]}"#;
        assert!(matches!(parse_input(text), Err(Error::NotBraided { .. })));
    }

    #[test]
    fn marks() {
        let q = FieldSpec::Rationals;
        let dj = generate("dj_hecke", q, &GeneratorParams { n: Some(2), q: Some("2".into()), ..Default::default() }).unwrap();
        assert_eq!(default_mark(&dj).unwrap(), q.from_i64(4));
        assert_eq!(default_mark(&BraidedSpace::scalar(q, 1, &q.one()).unwrap()).unwrap(), q.one());
        assert!(default_mark(&BraidedSpace::scalar(q, 1, &q.from_i64(-1)).unwrap()).is_err());
    }
}
