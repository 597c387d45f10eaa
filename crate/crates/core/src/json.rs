//! JSON schema for weights.  A weight is given either by its standard
//! coordinates or by fundamental data:
//!
//! ```json
//! {"n": 2, "r": 1, "standard": [[-1, -11]]}
//! {"n": 2, "r": 1, "fundamental": {"a": [[11]], "d": ["-6"]}}
//! ```
//!
//! Rationals travel as exact fraction strings (`"p"` or `"p/q"`), never as
//! floats.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::{fraction_string, parse_fraction, FundamentalCoords, Weight};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightJson {
    pub n: usize,
    pub r: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub standard: Option<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fundamental: Option<FundamentalJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FundamentalJson {
    pub a: Vec<Vec<i64>>,
    pub d: Vec<String>,
}

pub fn parse_weight_json(text: &str) -> Result<Weight> {
    let wj: WeightJson =
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("bad weight JSON: {e}")))?;
    weight_from_schema(&wj)
}

pub fn weight_from_schema(wj: &WeightJson) -> Result<Weight> {
    match (&wj.standard, &wj.fundamental) {
        (Some(coords), None) => Weight::new(wj.n, wj.r, coords.clone()),
        (None, Some(f)) => {
            if f.a.len() != wj.r || f.d.len() != wj.r {
                return Err(Error::Invalid(format!(
                    "fundamental data must list {} embeddings",
                    wj.r
                )));
            }
            let d = f.d.iter().map(|s| parse_fraction(s)).collect::<Result<Vec<_>>>()?;
            let fc = FundamentalCoords { a: f.a.clone(), d, r_lambda: vec![] };
            let w = fc.to_weight(wj.n)?;
            if w.degree() != wj.r {
                return Err(Error::DegreeMismatch);
            }
            Ok(w)
        }
        _ => Err(Error::Invalid(
            "weight JSON needs exactly one of \"standard\" or \"fundamental\"".into(),
        )),
    }
}

/// Canonical serialization: standard coordinates.
pub fn weight_to_schema(w: &Weight) -> WeightJson {
    WeightJson {
        n: w.rank(),
        r: w.degree(),
        standard: Some(w.coords().to_vec()),
        fundamental: None,
    }
}

/// Fundamental data of a weight, with `d` as fraction strings.
pub fn fundamental_to_schema(w: &Weight) -> FundamentalJson {
    let f = w.to_fundamental();
    FundamentalJson {
        a: f.a,
        d: f.d.into_iter().map(fraction_string).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_round_trip() {
        let w = parse_weight_json(r#"{"n": 2, "r": 1, "standard": [[-1, -11]]}"#).unwrap();
        assert_eq!(w.coords(), &[vec![-1, -11]]);
        let back = serde_json::to_string(&weight_to_schema(&w)).unwrap();
        assert_eq!(parse_weight_json(&back).unwrap(), w);
    }

    #[test]
    fn fundamental_input() {
        let w =
            parse_weight_json(r#"{"n": 2, "r": 1, "fundamental": {"a": [[11]], "d": ["-6"]}}"#)
                .unwrap();
        assert_eq!(w.coords(), &[vec![-1, -11]]);
        // half-integral d over two embeddings
        let w = parse_weight_json(
            r#"{"n": 2, "r": 2, "fundamental": {"a": [[4], [2]], "d": ["-3/2", "-3/2"]}}"#,
        )
        .unwrap();
        assert_eq!(w.coords(), &[vec![0, -3], vec![-1, -2]]);
    }

    #[test]
    fn rejections() {
        assert!(parse_weight_json(r#"{"n": 2, "r": 1}"#).is_err());
        assert!(parse_weight_json(
            r#"{"n": 2, "r": 1, "standard": [[0, 0]], "fundamental": {"a": [[1]], "d": ["0"]}}"#
        )
        .is_err());
        // non-integral coordinates
        assert!(parse_weight_json(r#"{"n": 2, "r": 1, "fundamental": {"a": [[2]], "d": ["0"]}}"#)
            .is_err());
        assert!(parse_weight_json(r#"{"n": 2, "r": 1, "standard": [[1, 2, 3]]}"#).is_err());
    }
}
