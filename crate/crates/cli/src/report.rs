//! The per-graph property record shared by `analyze` and `catalog`.

use domcrit_core::{
    factor_critical_violator, theorem_check, to_graph6, Certificate, Graph, TheoremStatus,
};
use serde::Serialize;

use crate::CliError;

/// Largest order `analyze` accepts; the certificate is a subset scan.
pub const ANALYZE_LIMIT: usize = domcrit_core::matching::SUBSET_SCAN_LIMIT;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Properties {
    pub order: usize,
    pub size: usize,
    pub gamma: usize,
    pub min_degree: usize,
    pub biconnected: bool,
    pub k15_free: bool,
    pub three_critical: bool,
    pub factor_critical: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportLine {
    pub graph6: String,
    pub properties: Properties,
    pub verdict: TheoremStatus,
    pub certificate: Option<Certificate>,
}

impl ReportLine {
    /// Checks the record against itself and the graph it describes.
    pub fn consistency_error(&self, g: &Graph) -> Option<String> {
        let p = &self.properties;
        if let Some(cert) = &self.certificate {
            if !cert.validate(g) {
                return Some(format!("certificate {:?} fails re-validation", cert.set));
            }
        }
        if p.factor_critical == self.certificate.is_some() {
            return Some(format!(
                "factor_critical = {} but certificate present = {}",
                p.factor_critical,
                self.certificate.is_some()
            ));
        }
        if self.verdict == TheoremStatus::Confirmed && !p.factor_critical {
            return Some("verdict confirmed on a graph that is not factor-critical".into());
        }
        match domcrit_core::from_graph6(&self.graph6) {
            Ok(h) if &h == g => None,
            _ => Some("graph6 field does not round-trip".into()),
        }
    }
}

pub fn analyze_graph(g: &Graph) -> Result<ReportLine, CliError> {
    if g.order() > ANALYZE_LIMIT {
        return Err(CliError::Input(format!(
            "order {} exceeds the analysis limit {ANALYZE_LIMIT}",
            g.order()
        )));
    }
    let verdict = theorem_check(g).map_err(|e| CliError::Input(e.to_string()))?;
    let certificate = factor_critical_violator(g).map_err(|e| CliError::Input(e.to_string()))?;
    Ok(ReportLine {
        graph6: to_graph6(g),
        properties: Properties {
            order: g.order(),
            size: g.size(),
            gamma: verdict.gamma,
            min_degree: g.min_degree(),
            biconnected: verdict.hypotheses.biconnected,
            k15_free: verdict.hypotheses.k15_free,
            three_critical: verdict.hypotheses.three_critical,
            factor_critical: verdict.factor_critical,
        },
        verdict: verdict.status,
        certificate,
    })
}
