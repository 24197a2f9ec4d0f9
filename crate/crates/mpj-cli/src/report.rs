//! Report assembly: one structure serialized either as deterministic JSON
//! (machine) or aligned text (human). Roots and witnesses print as exact
//! rationals, never decimals.

use mpj_core::connections::ConnectionContext;
use mpj_core::decomposition::{
    Check, ComponentReport, DecompositionReport, DirectnessReport, IdealData,
};
use mpj_core::rational::format_rat;
use mpj_core::split::{Root, RootProductsReport, SplitReport};
use mpj_core::{AxiomReport, QVec, Subspace};
use serde::{Deserialize, Serialize};

#[derive(Clone, Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct CheckJson {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct IdealJson {
    pub class: Vec<Vec<String>>,
    pub i_h_dim: usize,
    pub v_dim: usize,
    pub i_dim: usize,
}

#[derive(Clone, Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct ThetaJson {
    pub alpha: Vec<String>,
    pub beta: Vec<String>,
    /// Which of the four product conditions of θ_α ⋆ β fired, in order:
    /// [[P_α,P_{−α}],P_β], (P_α P_{−α})P_β, [P_α P_{−α},P_β],
    /// [P_α,P_{−α}] P_β.
    pub fired: [bool; 4],
}

#[derive(Clone, Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct ComponentJson {
    pub class: Vec<Vec<String>>,
    pub dim: usize,
    pub axioms_pass: bool,
    pub root_system_matches: bool,
    pub criterion_simple: bool,
    pub oracle_simple_lattice: bool,
    pub oracle_simple_strict: bool,
}

#[derive(Clone, Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct DirectnessJson {
    pub center_zero: bool,
    pub h_generated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direct: Option<CheckJson>,
}

/// The machine report of `decompose`: field order is fixed by this struct,
/// all collections are sorted, so identical inputs serialize identically.
#[derive(Clone, Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct ReportFile {
    pub name: String,
    pub dim: usize,
    pub axioms: Vec<CheckJson>,
    pub h_dim: usize,
    pub lambda: Vec<Vec<String>>,
    pub root_space_dims: Vec<usize>,
    pub symmetric: bool,
    pub rootspace_product_checks: Vec<CheckJson>,
    pub omega: Vec<Vec<String>>,
    pub theta_star: Vec<ThetaJson>,
    pub classes: Vec<Vec<Vec<String>>>,
    pub ideals: Vec<IdealJson>,
    pub u_basis: Vec<Vec<String>>,
    pub theorem_checks: Vec<CheckJson>,
    pub directness: DirectnessJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<ComponentJson>>,
    /// Set when the simple-components theorem was skipped, with the list
    /// of unmet hypotheses.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components_skipped: Option<Vec<String>>,
}

pub fn root_json(r: &Root) -> Vec<String> {
    r.values().iter().map(format_rat).collect()
}

pub fn vec_json(v: &QVec) -> Vec<String> {
    v.coords.iter().map(format_rat).collect()
}

pub fn subspace_json(s: &Subspace) -> Vec<Vec<String>> {
    s.basis().iter().map(vec_json).collect()
}

pub fn axioms_json(report: &AxiomReport, basis_names: &[String]) -> Vec<CheckJson> {
    report
        .verdicts()
        .into_iter()
        .map(|(name, v)| CheckJson {
            name: name.to_string(),
            pass: v.passed(),
            witness: v.witness().map(|w| w.render(basis_names)),
        })
        .collect()
}

pub fn check_json(c: &Check) -> CheckJson {
    CheckJson { name: c.name.clone(), pass: c.passed, witness: c.witness.clone() }
}

pub fn rootspace_checks_json(report: &RootProductsReport) -> Vec<CheckJson> {
    report
        .checks
        .iter()
        .map(|c| CheckJson {
            name: c.description.clone(),
            pass: c.passed,
            witness: c.witness.as_ref().map(|w| format!("escaping product {w:?}")),
        })
        .collect()
}

pub fn ideal_json(ideal: &IdealData) -> IdealJson {
    IdealJson {
        class: ideal.class_roots.iter().map(root_json).collect(),
        i_h_dim: ideal.i_h.dim(),
        v_dim: ideal.v.dim(),
        i_dim: ideal.i.dim(),
    }
}

pub fn component_json(c: &ComponentReport) -> ComponentJson {
    ComponentJson {
        class: c.class_roots.iter().map(root_json).collect(),
        dim: c.dim,
        axioms_pass: c.axioms_pass,
        root_system_matches: c.root_system_matches,
        criterion_simple: c.criterion_simple,
        oracle_simple_lattice: c.oracle.lattice,
        oracle_simple_strict: c.oracle.strict,
    }
}

pub fn directness_json(d: &DirectnessReport) -> DirectnessJson {
    DirectnessJson {
        center_zero: d.center_zero,
        h_generated: d.h_generated,
        direct: d.direct.as_ref().map(check_json),
    }
}

pub fn theta_star_json(ctx: &ConnectionContext) -> Vec<ThetaJson> {
    let mut out = Vec::new();
    for alpha in ctx.omega() {
        for beta in ctx.pm_lambda() {
            out.push(ThetaJson {
                alpha: root_json(alpha),
                beta: root_json(beta),
                fired: ctx.theta_star_conditions(alpha, beta),
            });
        }
    }
    out
}

/// Everything `decompose` computed, before the skipped-components step.
pub struct DecomposePipeline {
    pub axioms: AxiomReport,
    pub split: SplitReport,
    pub rootspace: RootProductsReport,
    pub result: Result<DecompositionReport, Vec<String>>,
    /// Theorem checks that ran regardless of the simple-components
    /// hypotheses (ideal family + spans_P), with the directness report.
    pub ideals: Vec<IdealData>,
    pub u: Subspace,
    pub theorem_checks: Vec<Check>,
    pub directness: DirectnessReport,
}

pub fn build_report(name: &str, ctx: &ConnectionContext, p: &DecomposePipeline) -> ReportFile {
    let rd = ctx.rd();
    let a = rd.algebra();
    let classes = ctx.partition().expect("partition verified earlier");
    let (components, components_skipped) = match &p.result {
        Ok(dr) => (Some(dr.components.iter().map(component_json).collect()), None),
        Err(failed) => (None, Some(failed.clone())),
    };
    ReportFile {
        name: name.to_string(),
        dim: a.dim(),
        axioms: axioms_json(&p.axioms, a.basis_names()),
        h_dim: rd.h().dim(),
        lambda: rd.roots().iter().map(root_json).collect(),
        root_space_dims: rd.roots().iter().map(|r| rd.space_of(r).dim()).collect(),
        symmetric: p.split.symmetric,
        rootspace_product_checks: rootspace_checks_json(&p.rootspace),
        omega: ctx.omega().iter().map(root_json).collect(),
        theta_star: theta_star_json(ctx),
        classes: classes
            .iter()
            .map(|c| c.iter().map(root_json).collect())
            .collect(),
        ideals: p.ideals.iter().map(ideal_json).collect(),
        u_basis: subspace_json(&p.u),
        theorem_checks: p.theorem_checks.iter().map(check_json).collect(),
        directness: directness_json(&p.directness),
        components,
        components_skipped,
    }
}

impl ReportFile {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    /// Every theorem-grade verdict in the report, for exit-code mapping.
    pub fn theorem_verdicts_pass(&self) -> bool {
        self.rootspace_product_checks.iter().all(|c| c.pass)
            && self.theorem_checks.iter().all(|c| c.pass)
            && self.directness.direct.as_ref().is_none_or(|c| c.pass)
            && self.components.as_ref().is_none_or(|cs| {
                cs.iter().all(|c| {
                    c.axioms_pass
                        && c.root_system_matches
                        && c.criterion_simple
                        && c.oracle_simple_lattice
                })
            })
    }

    pub fn render_text(&self) -> String {
        let fmt_root = |r: &Vec<String>| format!("({})", r.join(","));
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("algebra {} (dim {})", self.name, self.dim));
        for c in &self.axioms {
            line(format!(
                "  axiom {:<20} {}{}",
                c.name,
                if c.pass { "pass" } else { "FAIL" },
                c.witness.as_deref().map(|w| format!("  [{w}]")).unwrap_or_default()
            ));
        }
        line(format!(
            "  H dim {}; Λ = {{{}}} with dims {:?}; symmetric: {}",
            self.h_dim,
            self.lambda.iter().map(fmt_root).collect::<Vec<_>>().join(", "),
            self.root_space_dims,
            self.symmetric
        ));
        let failures: Vec<&CheckJson> =
            self.rootspace_product_checks.iter().filter(|c| !c.pass).collect();
        line(format!(
            "  root-space product lemma: {} containments, {} failures",
            self.rootspace_product_checks.len(),
            failures.len()
        ));
        for c in failures {
            line(format!("    FAIL {} [{}]", c.name, c.witness.as_deref().unwrap_or("")));
        }
        line(format!(
            "  Ω = {{{}}}",
            self.omega.iter().map(fmt_root).collect::<Vec<_>>().join(", ")
        ));
        for t in &self.theta_star {
            if t.fired.iter().any(|&f| f) {
                line(format!(
                    "  θ_{} ⋆ {} = {}  (conditions fired: {})",
                    fmt_root(&t.alpha),
                    fmt_root(&t.beta),
                    fmt_root(&t.beta),
                    t.fired
                        .iter()
                        .enumerate()
                        .filter(|(_, &f)| f)
                        .map(|(i, _)| ["[[Pa,P-a],Pb]", "(PaP-a)Pb", "[PaP-a,Pb]", "[Pa,P-a]Pb"][i])
                        .collect::<Vec<_>>()
                        .join(", ")
                ));
            }
        }
        line(format!("  connection classes: {}", self.classes.len()));
        for (k, class) in self.classes.iter().enumerate() {
            line(format!(
                "    [{k}] = {{{}}}",
                class.iter().map(fmt_root).collect::<Vec<_>>().join(", ")
            ));
        }
        for (k, ideal) in self.ideals.iter().enumerate() {
            line(format!(
                "  I_[{k}]: dim {} = I_H dim {} ⊕ V dim {}",
                ideal.i_dim, ideal.i_h_dim, ideal.v_dim
            ));
        }
        line(format!("  U: dim {}", self.u_basis.len()));
        for c in &self.theorem_checks {
            line(format!(
                "  theorem {:<28} {}{}",
                c.name,
                if c.pass { "pass" } else { "FAIL" },
                c.witness.as_deref().map(|w| format!("  [{w}]")).unwrap_or_default()
            ));
        }
        line(format!(
            "  directness: Z(P)=0: {}, H generated: {}, direct sum: {}",
            self.directness.center_zero,
            self.directness.h_generated,
            match &self.directness.direct {
                Some(c) if c.pass => "pass".to_string(),
                Some(c) => format!("FAIL [{}]", c.witness.as_deref().unwrap_or("")),
                None => "not applicable".to_string(),
            }
        ));
        match (&self.components, &self.components_skipped) {
            (Some(cs), _) => {
                for (k, c) in cs.iter().enumerate() {
                    line(format!(
                        "  component {k}: dim {}, axioms {}, roots match {}, simple (criterion) {}, simple (oracle, lattice) {}, simple (oracle, strict) {}",
                        c.dim,
                        c.axioms_pass,
                        c.root_system_matches,
                        c.criterion_simple,
                        c.oracle_simple_lattice,
                        c.oracle_simple_strict
                    ));
                }
            }
            (None, Some(failed)) => {
                line(format!("  simple components skipped: {}", failed.join(", ")));
            }
            (None, None) => {}
        }
        out
    }
}
