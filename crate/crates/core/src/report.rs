//! Reports assembled from a [`Problem`], as aligned text or JSON.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cohomology::{OmegaEntry, StrandReport, TRANSVECTION_MARKER};
use crate::error::{Error, Result};
use crate::group::GroupClassification;
use crate::invariants::verify_relation;
use crate::problem::Problem;

pub const NOT_SPLIT_FLAG: &str = "inclusion R^G ⊆ R not split";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorEntry {
    pub degree: u32,
    pub poly: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AInvariant {
    pub value: Option<i64>,
    /// `cokernel` or `presentation`.
    pub method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub passed: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: impl ToString, got: impl ToString) -> Check {
        let (expected, got) = (expected.to_string(), got.to_string());
        Check { name: name.into(), passed: expected == got, expected, got }
    }

    pub fn flag(name: impl Into<String>, ok: bool) -> Check {
        Check::new(name, true, ok)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub name: String,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<GroupClassification>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariant_hilbert: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<GeneratorEntry>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub strands: Vec<StrandReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub omega: Vec<OmegaEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_invariant: Option<AInvariant>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
    /// Independent confirmations reported apart from the primary checks.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cross_checks: Vec<Check>,
}

impl Report {
    pub fn new(name: &str, command: &str) -> Report {
        Report { name: name.to_string(), command: command.to_string(), ..Default::default() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable")
    }

    pub fn from_json(text: &str) -> Result<Report> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().chain(&self.cross_checks).all(|c| c.passed)
    }

    /// True when some strand had its cokernel rank withheld.
    pub fn refused(&self) -> bool {
        self.strands.iter().any(|s| s.rank_h.is_none())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} [{}]", self.name, self.command);
        if let Some(c) = &self.classification {
            let rows = [
                ("order", c.order.to_string()),
                ("in SL", c.in_sl.to_string()),
                ("pseudoreflections", c.pseudoreflections.len().to_string()),
                ("transvections", c.transvections.len().to_string()),
                ("modular", c.modular.to_string()),
                ("cyclic", c.cyclic_generator.map_or("no".into(), |i| format!("yes (element {i})"))),
            ];
            for (k, v) in rows {
                let _ = writeln!(out, "  {k:<18} {v}");
            }
        }
        if let Some(h) = &self.invariant_hilbert {
            let dims: Vec<String> = h.iter().map(|d| d.to_string()).collect();
            let _ = writeln!(out, "  invariant dims     {}", dims.join(" "));
        }
        if let Some(gens) = &self.generators {
            let _ = writeln!(out, "  generators up to degree {}:", gens.last().map_or(0, |g| g.degree));
            for g in gens {
                let _ = writeln!(out, "    [{}] {}", g.degree, g.poly);
            }
        }
        if !self.strands.is_empty() {
            let _ = writeln!(out, "  {:>5} {:>6} {:>6} {:>7} {:>10}", "k", "dimV", "dimW", "rank_H", "rank_fixed");
            for s in &self.strands {
                let rank = s.rank_h.map_or("-".to_string(), |r| r.to_string());
                let _ = write!(out, "  {:>5} {:>6} {:>6} {:>7} {:>10}", s.degree, s.dim_v, s.dim_w, rank, s.rank_fixed);
                if let Some(m) = &s.marker {
                    let _ = write!(out, "  ({m})");
                }
                out.push('\n');
            }
        }
        if let Some(a) = &self.a_invariant {
            let value = a.value.map_or("-".to_string(), |v| v.to_string());
            let _ = write!(out, "  a-invariant        {value} via {}", a.method);
            if let Some(note) = &a.note {
                let _ = write!(out, " ({note})");
            }
            out.push('\n');
        }
        for f in &self.flags {
            let _ = writeln!(out, "  note: {f}");
        }
        let width = self.checks.iter().chain(&self.cross_checks).map(|c| c.name.len()).max().unwrap_or(0);
        let line = |out: &mut String, c: &Check| {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            let _ = write!(out, "  [{tag}] {:<width$}  {}", c.name, c.got);
            if !c.passed {
                let _ = write!(out, " (expected {})", c.expected);
            }
            out.push('\n');
        };
        for c in &self.checks {
            line(&mut out, c);
        }
        if !self.cross_checks.is_empty() {
            let _ = writeln!(out, "  cross-checks:");
            for c in &self.cross_checks {
                line(&mut out, c);
            }
        }
        if !self.checks.is_empty() || !self.cross_checks.is_empty() {
            let passed = self.checks.iter().filter(|c| c.passed).count();
            let crossed = self.cross_checks.iter().filter(|c| c.passed).count();
            let verdict = if self.all_passed() { "PASS" } else { "FAIL" };
            let _ = write!(out, "{verdict}: {passed}/{} checks", self.checks.len());
            if !self.cross_checks.is_empty() {
                let _ = write!(out, ", {crossed}/{} cross-checks", self.cross_checks.len());
            }
            out.push('\n');
        }
        out
    }
}

pub fn classify(problem: &Problem) -> Report {
    let mut r = Report::new(problem.name(), "classify");
    r.classification = Some(problem.action.group().classify());
    r
}

pub fn invariants(problem: &Problem, max_degree: u32) -> Result<Report> {
    let mut r = Report::new(problem.name(), "invariants");
    let action = &problem.action;
    let dims = action.invariant_spaces(0..=max_degree)?.iter().map(|s| s.dimension()).collect();
    r.invariant_hilbert = Some(dims);
    let gens = action.algebra_generators_up_to(max_degree)?;
    r.generators = Some(gens.iter().map(|(p, d)| GeneratorEntry { degree: *d, poly: p.to_string() }).collect());
    for (i, rel) in problem.relations.iter().enumerate() {
        let ok = verify_relation(rel, &problem.invariant_generators)?;
        r.checks.push(Check::flag(format!("relation {} vanishes", i + 1), ok));
    }
    Ok(r)
}

/// Strand table over `[from, to]` plus the a-invariant where one is computable.
pub fn lc(problem: &Problem, from: i64, to: i64) -> Result<Report> {
    let (lo, hi) = if from <= to { (from, to) } else { (to, from) };
    let mut r = Report::new(problem.name(), "lc");
    let lcoh = problem.local_cohomology()?;
    let table = lcoh.hilbert_of_h(lo..=hi)?;
    r.strands = table.rows;
    r.omega = table.omega;
    r.classification = Some(lcoh.classification().clone());
    r.a_invariant = Some(a_invariant_entry(problem, problem.spec.windows.floor)?);
    add_flags(problem, &mut r);
    Ok(r)
}

pub fn a_invariant(problem: &Problem, floor: Option<i64>) -> Result<Report> {
    let mut r = Report::new(problem.name(), "a-invariant");
    let entry = a_invariant_entry(problem, floor.or(problem.spec.windows.floor))?;
    if entry.value.is_none() {
        return Err(Error::TransvectionsPresent);
    }
    r.a_invariant = Some(entry);
    add_flags(problem, &mut r);
    Ok(r)
}

/// Cokernel search without transvections, otherwise the presented ring if it is asserted CM.
fn a_invariant_entry(problem: &Problem, floor: Option<i64>) -> Result<AInvariant> {
    let has_transvection = problem.action.group().classify().has_transvection;
    if !has_transvection {
        let value = problem.local_cohomology()?.a_invariant(floor)?;
        return Ok(AInvariant { value: Some(value), method: "cokernel".into(), note: None });
    }
    match &problem.presentation {
        Some(pa) if pa.cm_asserted() => Ok(AInvariant {
            value: Some(pa.presented_a_invariant(floor)?),
            method: "presentation".into(),
            note: Some(TRANSVECTION_MARKER.into()),
        }),
        _ => Ok(AInvariant { value: None, method: "cokernel".into(), note: Some(TRANSVECTION_MARKER.into()) }),
    }
}

fn add_flags(problem: &Problem, r: &mut Report) {
    let n = problem.n() as i64;
    let modular = problem.action.group().is_modular();
    if modular && r.a_invariant.as_ref().and_then(|a| a.value) == Some(-n) {
        r.flags.push(NOT_SPLIT_FLAG.to_string());
    }
}
