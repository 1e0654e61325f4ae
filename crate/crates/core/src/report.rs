//! Per-graph membership report over the six connected classes.
//!
//! C-II, C-MI, C-HI and C-HH are decided by the recognizers. C-IH and C-MH
//! have no structural characterisation; they are settled by one-sided facts
//! where one applies and by the oracle otherwise.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::Family;
use crate::graph::{to_graph6, Graph};
use crate::oracle::{self, ClassQuery, OracleConfig, Witness};
use crate::recognizers::{self, ChhCase, ChhFamily, CiiMatch};

/// Final verdict for one class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Membership {
    #[serde(rename = "YES")]
    Yes,
    #[serde(rename = "NO")]
    No,
    /// Undecided: no structural rule applies and the oracle was not run.
    #[serde(rename = "ORACLE_ONLY")]
    OracleOnly,
}

impl From<bool> for Membership {
    fn from(b: bool) -> Self {
        if b {
            Membership::Yes
        } else {
            Membership::No
        }
    }
}

/// When to run the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OracleMode {
    Never,
    /// Only for classes that nothing else settles.
    #[default]
    WhenUndecided,
    /// For every requested class, cross-checking the recognizers.
    Always,
}

#[derive(Clone, Debug, Default)]
pub struct ReportOptions {
    pub oracle: OracleMode,
    pub config: OracleConfig,
    /// Classes to report on; empty means all six.
    pub classes: Vec<ClassQuery>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassEntry {
    pub verdict: Membership,
    /// Verdict of the structural recognizer, for the four classified classes.
    pub recognizer: Option<bool>,
    /// Verdict implied by a known one-sided fact.
    pub fact: Option<bool>,
    pub facts: Vec<String>,
    pub oracle: Option<bool>,
    pub witness: Option<Witness>,
}

impl ClassEntry {
    /// Whether the oracle contradicts the recognizer or a fact.
    pub fn mismatch(&self) -> bool {
        self.oracle.is_some_and(|o| self.recognizer.is_some_and(|r| r != o) || self.fact.is_some_and(|f| f != o))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassReport {
    pub graph6: String,
    pub n: usize,
    pub classes: BTreeMap<String, ClassEntry>,
    pub cii: Option<CiiMatch>,
    pub chh_case: Option<ChhCase>,
    /// Every connected C-HH family the graph belongs to (connected graphs only).
    pub chh_families: Vec<ChhFamily>,
    pub multiclaw: Option<Family>,
    pub mismatch: bool,
}

impl ClassReport {
    pub fn entry(&self, q: ClassQuery) -> Option<&ClassEntry> {
        self.classes.get(&q.name())
    }
}

/// Builds the report. Oracle budget overruns are errors only in
/// [`OracleMode::Always`]; otherwise the class stays undecided.
pub fn classify(g: &Graph, opts: &ReportOptions) -> Result<ClassReport> {
    let classes: Vec<ClassQuery> =
        if opts.classes.is_empty() { ClassQuery::CONNECTED_CLASSES.to_vec() } else { opts.classes.clone() };
    let cii = recognizers::classify_cii(g);
    let chh_case = recognizers::is_chh(g);
    let chh_families = if g.is_connected() {
        recognizers::is_chh_connected(g)?.map(|m| m.all).unwrap_or_default()
    } else {
        Vec::new()
    };
    let multiclaw = multiclaw_params(g);
    let cmi = recognizers::is_cmi(g);
    let mh_negative = mh_negative_facts(g);

    let mut entries = BTreeMap::new();
    for q in classes {
        if !q.connected {
            return Err(Error::Precondition(format!("{q} is not one of the connected classes")));
        }
        let recognizer = match (q.x, q.y) {
            (crate::MorphKind::Iso, crate::MorphKind::Iso) => Some(cii.is_some()),
            (crate::MorphKind::Mono, crate::MorphKind::Iso) => Some(cmi),
            (crate::MorphKind::Homo, crate::MorphKind::Iso) => Some(recognizers::is_chi(g)),
            (crate::MorphKind::Homo, crate::MorphKind::Homo) => Some(chh_case.is_some()),
            _ => None,
        };
        let mut facts = Vec::new();
        let mut fact = None;
        if recognizer.is_none() {
            let mut positive = Vec::new();
            if chh_case.is_some() {
                positive.push("C-HH implies C-MH and C-IH");
            }
            if cmi {
                positive.push("C-MI implies C-MH and C-IH");
            }
            if q == ClassQuery::CIH {
                if cii.is_some() {
                    positive.push("C-II implies C-IH");
                }
                if multiclaw.is_some() {
                    positive.push("generalised multiclaws are IH, hence C-IH");
                }
            }
            if !positive.is_empty() {
                fact = Some(true);
                facts.extend(positive.into_iter().map(String::from));
            } else if q == ClassQuery::CMH && !mh_negative.is_empty() {
                fact = Some(false);
                facts.extend(mh_negative.iter().cloned());
            }
        }
        let settled = recognizer.or(fact);
        let run = match opts.oracle {
            OracleMode::Never => false,
            OracleMode::WhenUndecided => settled.is_none(),
            OracleMode::Always => true,
        };
        let mut oracle = None;
        let mut witness = None;
        if run {
            match oracle::is_c_xy(g, q, &opts.config) {
                Ok(v) => {
                    oracle = Some(v.holds());
                    witness = v.witness().cloned();
                }
                Err(e @ Error::Budget { .. }) if opts.oracle == OracleMode::Always => return Err(e),
                Err(Error::Budget { .. }) => {}
                Err(e) => return Err(e),
            }
        }
        let verdict = settled.or(oracle).map_or(Membership::OracleOnly, Membership::from);
        entries.insert(q.name(), ClassEntry { verdict, recognizer, fact, facts, oracle, witness });
    }
    let mismatch = entries.values().any(ClassEntry::mismatch);
    Ok(ClassReport {
        graph6: to_graph6(g),
        n: g.n(),
        classes: entries,
        cii,
        chh_case,
        chh_families,
        multiclaw,
        mismatch,
    })
}

/// Parameters `(m, k, js)` presenting `g` as a generalised multiclaw: its
/// complement is `m` isolated vertices plus complete multipartite components
/// whose parts all have one size `k`.
pub fn multiclaw_params(g: &Graph) -> Option<Family> {
    let co = g.complement();
    let mut m = 0;
    let mut k = None;
    let mut js = Vec::new();
    for c in co.connected_components() {
        if c.len() == 1 {
            m += 1;
            continue;
        }
        // c induces a complete multipartite graph in the complement, i.e. a
        // disjoint union of cliques in g
        let h = g.induced(c).ok()?;
        let parts = h.connected_components();
        let size = parts[0].len();
        if parts.len() < 2 || !parts.iter().all(|&p| p.len() == size && h.is_clique(p)) {
            return None;
        }
        if *k.get_or_insert(size) != size {
            return None;
        }
        js.push(parts.len());
    }
    Some(Family::Multiclaw { m, k: k.unwrap_or(1), js })
}

/// Components known not to be C-MH: `L(K_{s,s})` with `s >= 3`, Petersen,
/// Clebsch, and complete multipartite graphs with more than two parts that
/// are not complete.
fn mh_negative_facts(g: &Graph) -> Vec<String> {
    let mut out = Vec::new();
    for c in g.component_graphs() {
        if let Some(f @ (Family::LineKss { .. } | Family::Petersen | Family::Clebsch)) =
            recognizers::classify_cii(&c).map(|m| m.family)
        {
            out.push(format!("component {f} is not C-MH"));
            continue;
        }
        let co = c.complement();
        let parts = co.connected_components();
        if parts.len() > 2 && !c.is_complete() && parts.iter().all(|&p| co.is_clique(p)) {
            out.push(format!("component is complete {}-partite and not complete, so not C-MH", parts.len()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(f: Family) -> ClassReport {
        classify(&f.make().unwrap(), &ReportOptions::default()).unwrap()
    }

    fn verdict(r: &ClassReport, q: ClassQuery) -> Membership {
        r.entry(q).unwrap().verdict
    }

    #[test]
    fn named_graphs() {
        let octahedron = report(Family::RegularMultipartite { t: 3, s: 2 });
        assert_eq!(verdict(&octahedron, ClassQuery::CII), Membership::Yes);
        assert_eq!(verdict(&octahedron, ClassQuery::CMH), Membership::No);

        let clebsch = report(Family::Clebsch);
        assert_eq!(verdict(&clebsch, ClassQuery::CII), Membership::Yes);
        assert_eq!(verdict(&clebsch, ClassQuery::CMH), Membership::No);

        let k23 = report(Family::CompleteBipartite { m: 2, n: 3 });
        assert_eq!(verdict(&k23, ClassQuery::CHH), Membership::Yes);
        assert_eq!(verdict(&k23, ClassQuery::CII), Membership::No);
        assert!(!k23.mismatch);
    }

    #[test]
    fn multiclaw_detection() {
        let f = Family::Multiclaw { m: 2, k: 2, js: vec![2, 3] };
        assert_eq!(multiclaw_params(&f.make().unwrap()), Some(f));
        assert!(multiclaw_params(&Family::Cycle { n: 5 }.make().unwrap()).is_none());
    }

    #[test]
    fn always_mode_cross_checks() {
        let opts = ReportOptions { oracle: OracleMode::Always, ..Default::default() };
        let r = classify(&Family::Cycle { n: 6 }.make().unwrap(), &opts).unwrap();
        assert!(!r.mismatch);
        assert_eq!(r.entry(ClassQuery::CHI).unwrap().oracle, Some(false));
        assert!(r.entry(ClassQuery::CHI).unwrap().witness.is_some());
    }
}
