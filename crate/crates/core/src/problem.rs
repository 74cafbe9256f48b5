//! JSON problem files: a field, variables, generator matrices and optional
//! hsop, invariant generators, relations and a presented invariant ring.

use serde::{Deserialize, Serialize};

use crate::cohomology::{LocalCohomology, PresentedAlgebra};
use crate::error::{Error, Result};
use crate::field::{Field, FieldDesc};
use crate::group::FiniteMatrixGroup;
use crate::invariants::ActionCtx;
use crate::linalg::Matrix;
use crate::parse::{parse_poly, parse_scalar};
use crate::poly::{MonomialOrder, Poly, Ring, RingCtx};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedGenerators {
    pub names: Vec<String>,
    pub polys: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationSpec {
    pub variables: Vec<String>,
    pub ambient_degrees: Vec<u32>,
    #[serde(default)]
    pub relations: Vec<String>,
    pub hsop: Vec<String>,
    #[serde(default)]
    pub cm_asserted: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Windows {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lc: Option<(i64, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub floor: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemSpec {
    #[serde(default)]
    pub name: String,
    pub field: FieldDesc,
    pub variables: Vec<String>,
    /// Row-major matrices of scalar strings.
    pub generators: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hsop: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariant_generators: Option<NamedGenerators>,
    /// Relations among the invariant generators, in their names.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presentation: Option<PresentationSpec>,
    #[serde(default)]
    pub windows: Windows,
}

/// A validated problem.
#[derive(Debug)]
pub struct Problem {
    pub spec: ProblemSpec,
    pub field: Field,
    pub ring: Ring,
    pub action: ActionCtx,
    pub hsop: Option<Vec<Poly>>,
    /// Formal ring of the invariant generator names, graded by their degrees.
    pub generator_ring: Option<Ring>,
    pub invariant_generators: Vec<Poly>,
    pub relations: Vec<Poly>,
    pub presentation: Option<PresentedAlgebra>,
}

fn parse_all(ring: &Ring, items: &[String]) -> Result<Vec<Poly>> {
    items.iter().map(|s| parse_poly(ring, s)).collect()
}

impl ProblemSpec {
    pub fn from_json(text: &str) -> Result<ProblemSpec> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable")
    }

    pub fn load(&self) -> Result<Problem> {
        let field = Field::from_desc(&self.field)?;
        let names: Vec<&str> = self.variables.iter().map(String::as_str).collect();
        let ring = RingCtx::new(&field, &names)?;
        let n = names.len();
        let mut mats = Vec::new();
        for g in &self.generators {
            if g.len() != n || g.iter().any(|row| row.len() != n) {
                return Err(Error::Parse(format!("generator matrices must be {n}x{n}")));
            }
            let rows = g
                .iter()
                .map(|row| row.iter().map(|s| parse_scalar(&field, s)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            mats.push(Matrix::from_rows(&field, rows)?);
        }
        let group = FiniteMatrixGroup::closure(&field, n, mats)?;
        let action = ActionCtx::new(group, &ring)?;

        let hsop = match &self.hsop {
            Some(items) => {
                let ys = parse_all(&ring, items)?;
                if !action.verify_hsop(&ys)? {
                    return Err(Error::NotAnHsop);
                }
                Some(ys)
            }
            None => None,
        };

        let (generator_ring, invariant_generators) = match &self.invariant_generators {
            Some(named) => {
                if named.names.len() != named.polys.len() {
                    return Err(Error::WrongCount { expected: named.names.len(), got: named.polys.len() });
                }
                let polys = parse_all(&ring, &named.polys)?;
                for p in &polys {
                    if p.is_zero() || !p.is_homogeneous() {
                        return Err(Error::NonHomogeneousInput);
                    }
                    if !action.is_invariant(p)? {
                        return Err(Error::NotInvariant(p.to_string()));
                    }
                }
                let weights = polys.iter().map(|p| p.degree().map(|d| d.max(1))).collect::<Result<Vec<_>>>()?;
                let formal = RingCtx::weighted(&field, named.names.clone(), weights, MonomialOrder::GrevLex)?;
                (Some(formal), polys)
            }
            None => (None, Vec::new()),
        };

        let relations = match (&generator_ring, self.relations.is_empty()) {
            (_, true) => Vec::new(),
            (Some(formal), false) => parse_all(formal, &self.relations)?,
            (None, false) => return Err(Error::Parse("relations need named invariant_generators".into())),
        };

        let presentation = match &self.presentation {
            Some(pres) => {
                if pres.variables.len() != pres.ambient_degrees.len() {
                    return Err(Error::WrongCount { expected: pres.variables.len(), got: pres.ambient_degrees.len() });
                }
                let pring = RingCtx::weighted(&field, pres.variables.clone(), pres.ambient_degrees.clone(), MonomialOrder::GrevLex)?;
                let rels = parse_all(&pring, &pres.relations)?;
                let ys = parse_all(&pring, &pres.hsop)?;
                Some(PresentedAlgebra::new(&pring, rels, ys, pres.cm_asserted)?)
            }
            None => None,
        };

        Ok(Problem {
            spec: self.clone(),
            field,
            ring,
            action,
            hsop,
            generator_ring,
            invariant_generators,
            relations,
            presentation,
        })
    }
}

impl Problem {
    pub fn from_json(text: &str) -> Result<Problem> {
        ProblemSpec::from_json(text)?.load()
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn n(&self) -> usize {
        self.ring.nvars()
    }

    pub fn poly(&self, s: &str) -> Result<Poly> {
        parse_poly(&self.ring, s)
    }

    /// Strand machinery; requires an hsop.
    pub fn local_cohomology(&self) -> Result<LocalCohomology> {
        let ys = self.hsop.clone().ok_or_else(|| Error::Parse("problem has no hsop".into()))?;
        LocalCohomology::new(self.action.clone(), ys)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const S2: &str = r#"{
        "name": "s2",
        "field": {"char": 3},
        "variables": ["x", "y"],
        "generators": [[["0", "1"], ["1", "0"]]],
        "hsop": ["x + y", "x*y"],
        "invariant_generators": {"names": ["e1", "e2"], "polys": ["x + y", "x*y"]},
        "windows": {"lc": [-3, -2]}
    }"#;

    #[test]
    fn load_and_round_trip() {
        let spec = ProblemSpec::from_json(S2).unwrap();
        assert_eq!(ProblemSpec::from_json(&spec.to_json()).unwrap(), spec);
        let p = spec.load().unwrap();
        assert_eq!(p.action.group().order(), 2);
        assert_eq!(p.generator_ring.as_ref().unwrap().weights(), &[1, 2]);
        assert_eq!(p.spec.windows.lc, Some((-3, -2)));
    }

    #[test]
    fn validation_errors() {
        let bad_hsop = S2.replace(r#""hsop": ["x + y", "x*y"]"#, r#""hsop": ["x + y", "x^2 + 2*x*y + y^2"]"#);
        assert_eq!(Problem::from_json(&bad_hsop).unwrap_err(), Error::NotAnHsop);
        let not_inv = S2.replace(r#""polys": ["x + y", "x*y"]"#, r#""polys": ["x", "x*y"]"#);
        assert!(matches!(Problem::from_json(&not_inv).unwrap_err(), Error::NotInvariant(_)));
        let bad_matrix = S2.replace(r#"[["0", "1"], ["1", "0"]]"#, r#"[["0", "1"]]"#);
        assert!(matches!(Problem::from_json(&bad_matrix).unwrap_err(), Error::Parse(_)));
        assert!(matches!(Problem::from_json("{").unwrap_err(), Error::Parse(_)));
        let bad_poly = S2.replace("x*y\"]", "x*q\"]");
        assert!(matches!(Problem::from_json(&bad_poly).unwrap_err(), Error::Parse(_)));
    }
}
