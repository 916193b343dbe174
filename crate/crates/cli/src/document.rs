//! JSON polynomial documents. Coefficients are strings in the exact scalar
//! text form (`a`, `a/b`, `a/b+c/e*sqrt(d)`), never floats.

use rrmf_core::{QuatPoly, Quaternion, RealPoly, Scalar};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Quaternion,
    Complex,
    Real,
}

impl Kind {
    fn width(self) -> usize {
        match self {
            Kind::Quaternion => 4,
            Kind::Complex => 2,
            Kind::Real => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub a: Vec<String>,
    pub b: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyDocument {
    #[serde(default)]
    pub sqrt_base: u32,
    pub kind: Kind,
    /// Ascending; each entry holds the components of one coefficient.
    pub coefficients: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<serde_json::Value>,
}

/// Parses one scalar and checks it against the document's base.
pub fn parse_scalar(s: &str, base: u32) -> Result<Scalar, CliError> {
    let x: Scalar = s.parse().map_err(|e: rrmf_core::Error| CliError::Parse(format!("'{s}': {e}")))?;
    if x.base() != 0 && x.base() != base {
        return Err(CliError::Parse(format!("'{s}' uses sqrt({}) but the document declares sqrt_base {base}", x.base())));
    }
    Ok(x)
}

fn parse_real(v: &[String], base: u32) -> Result<RealPoly, CliError> {
    Ok(RealPoly::new(v.iter().map(|s| parse_scalar(s, base)).collect::<Result<_, _>>()?))
}

pub fn real_strings(p: &RealPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

pub fn quat_strings(q: &Quaternion) -> Vec<String> {
    q.components().iter().map(|c| c.to_string()).collect()
}

impl PolyDocument {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let doc: PolyDocument = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.sqrt_base != 0 && (self.sqrt_base < 2 || Scalar::sqrt_of(self.sqrt_base).is_err()) {
            return Err(CliError::Parse(format!("sqrt_base {} is not 0 or a squarefree integer >= 2", self.sqrt_base)));
        }
        let w = self.kind.width();
        if let Some(bad) = self.coefficients.iter().position(|c| c.len() != w) {
            return Err(CliError::Parse(format!("coefficient {bad} has {} components, expected {w}", self.coefficients[bad].len())));
        }
        self.scalar_rows()?;
        if let Some(c) = &self.certificate {
            parse_real(&c.a, self.sqrt_base)?;
            parse_real(&c.b, self.sqrt_base)?;
        }
        Ok(())
    }

    fn scalar_rows(&self) -> Result<Vec<Vec<Scalar>>, CliError> {
        self.coefficients
            .iter()
            .map(|row| row.iter().map(|s| parse_scalar(s, self.sqrt_base)).collect())
            .collect()
    }

    /// The polynomial as a quaternion polynomial (real and complex kinds embed).
    pub fn quat_poly(&self) -> Result<QuatPoly, CliError> {
        let rows = self.scalar_rows()?;
        Ok(QuatPoly::new(
            rows.into_iter()
                .map(|r| {
                    let mut r = r.into_iter();
                    let mut next = || r.next().unwrap_or_else(Scalar::zero);
                    Quaternion::new(next(), next(), next(), next())
                })
                .collect(),
        ))
    }

    pub fn certificate_polys(&self) -> Result<Option<(RealPoly, RealPoly)>, CliError> {
        self.certificate
            .as_ref()
            .map(|c| Ok((parse_real(&c.a, self.sqrt_base)?, parse_real(&c.b, self.sqrt_base)?)))
            .transpose()
    }

    pub fn from_quat(a: &QuatPoly) -> Self {
        PolyDocument {
            sqrt_base: a.surd_base().unwrap_or(0),
            kind: Kind::Quaternion,
            coefficients: a.coeffs().iter().map(quat_strings).collect(),
            certificate: None,
            metadata: None,
        }
    }

    pub fn with_certificate(mut self, a: &RealPoly, b: &RealPoly) -> Self {
        self.certificate = Some(Certificate { a: real_strings(a), b: real_strings(b) });
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = r#"{"sqrt_base":15,"kind":"quaternion","coefficients":[["-35","90","3*sqrt(15)","-6*sqrt(15)"],["0","-80","0","0"],["8","16","0","0"]],"certificate":{"a":["-38","51","-24","4"],"b":["-41","32","-8"]}}"#;
        let doc = PolyDocument::from_json(text).unwrap();
        assert_eq!(PolyDocument::from_json(&doc.to_json()).unwrap(), doc);
        assert_eq!(doc.quat_poly().unwrap(), rrmf_core::fixtures::example3().generator);
    }

    #[test]
    fn rejects_bad_documents() {
        let bad_base = r#"{"sqrt_base":0,"kind":"real","coefficients":[["sqrt(2)"]]}"#;
        assert!(matches!(PolyDocument::from_json(bad_base), Err(CliError::Parse(_))));
        let bad_width = r#"{"kind":"quaternion","coefficients":[["1","0"]]}"#;
        assert!(matches!(PolyDocument::from_json(bad_width), Err(CliError::Parse(_))));
        let bad_scalar = r#"{"kind":"real","coefficients":[["1.5"]]}"#;
        assert!(matches!(PolyDocument::from_json(bad_scalar), Err(CliError::Parse(_))));
        let bad_field = r#"{"sqrt_base":4,"kind":"real","coefficients":[]}"#;
        assert!(matches!(PolyDocument::from_json(bad_field), Err(CliError::Parse(_))));
    }
}
