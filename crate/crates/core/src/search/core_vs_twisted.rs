use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::Automorphism;
use crate::numerics::Mode;
use crate::quandle::{alexander_table, check_axioms, core_table, twisted_conj_table, FiniteQuandle, Quandle};
use crate::search::{automorphisms, group_catalog, quandle_isomorphic, IsoWitness};
use crate::verify::{Outcome, VerificationReport};

/// One `(G, H, ψ)` comparison of Core G against Conj(H, ψ).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub g: String,
    pub h: String,
    pub psi: Vec<usize>,
    pub psi_involutive: bool,
    pub psi_is_identity: bool,
    pub psi_is_inversion: bool,
    pub result: IsoWitness,
}

/// Summary for one catalog group G.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupVerdict {
    pub group: String,
    pub order: usize,
    pub abelian: bool,
    /// Number of `(H, ψ)` pairs compared.
    pub candidates: usize,
    pub matches: usize,
    /// True when no candidate matched and every comparison was exhausted.
    pub exhausted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub max_order: usize,
    pub pruning: bool,
    pub catalog: Vec<String>,
    pub findings: Vec<Finding>,
    pub verdicts: Vec<GroupVerdict>,
}

impl SearchReport {
    pub fn verdict(&self, group: &str) -> Option<&GroupVerdict> {
        self.verdicts.iter().find(|v| v.group == group)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }
}

fn validated(q: FiniteQuandle) -> Result<FiniteQuandle> {
    let r = check_axioms(&q, 0, 0, 0.0);
    if r.pass {
        Ok(q)
    } else {
        Err(Error::InvalidTable(format!("{}: {}", q.name(), r.witnesses.join("; "))))
    }
}

/// For every catalog group G of order at most `max_order`, compares Core G
/// with Conj(H, ψ) for every catalog H with |H| = |G| and every ψ ∈ Aut H.
/// Every table is checked against the quandle axioms before it is searched.
/// The output order depends only on the catalog, not on scheduling.
pub fn search_core_vs_twisted(max_order: usize, pruning: bool) -> Result<SearchReport> {
    let catalog = group_catalog(max_order)?;
    let autos: Vec<_> = catalog.par_iter().map(automorphisms).collect();
    let cores = catalog.par_iter().map(|g| validated(core_table(g))).collect::<Result<Vec<_>>>()?;

    let mut tasks = Vec::new();
    for (gi, g) in catalog.iter().enumerate() {
        for (hi, h) in catalog.iter().enumerate() {
            if h.order() == g.order() {
                tasks.extend((0..autos[hi].len()).map(|ai| (gi, hi, ai)));
            }
        }
    }
    let findings = tasks
        .par_iter()
        .map(|&(gi, hi, ai)| -> Result<Finding> {
            let (g, h, psi) = (&catalog[gi], &catalog[hi], &autos[hi][ai]);
            let twisted = validated(twisted_conj_table(h, &psi.to_automorphism(format!("psi{ai}"))))?;
            Ok(Finding {
                g: g.name().to_string(),
                h: h.name().to_string(),
                psi: psi.perm.clone(),
                psi_involutive: psi.involutive,
                psi_is_identity: psi.is_identity(),
                psi_is_inversion: psi.is_inversion(h),
                result: quandle_isomorphic(&cores[gi], &twisted, pruning),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let verdicts = catalog
        .iter()
        .map(|g| {
            let mine: Vec<&Finding> = findings.iter().filter(|f| f.g == g.name()).collect();
            let matches = mine.iter().filter(|f| f.result.is_isomorphic()).count();
            GroupVerdict {
                group: g.name().to_string(),
                order: g.order(),
                abelian: g.is_abelian(),
                candidates: mine.len(),
                matches,
                exhausted: matches == 0,
            }
        })
        .collect();
    Ok(SearchReport {
        max_order,
        pruning,
        catalog: catalog.iter().map(|g| g.name().to_string()).collect(),
        findings,
        verdicts,
    })
}

/// For every abelian catalog group, the core, twisted conjugation (ψ = Inv)
/// and generalized Alexander (ψ = Inv) tables coincide entrywise.
pub fn check_abelian_coincidence(max_order: usize) -> Result<VerificationReport> {
    let mut outcomes = Vec::new();
    for g in group_catalog(max_order)?.iter().filter(|g| g.is_abelian()) {
        let inv = Automorphism::inversion(g);
        let core = core_table(g);
        for (label, other) in [("twisted", twisted_conj_table(g, &inv)), ("alexander", alexander_table(g, &inv))] {
            let diff = (0..g.order()).flat_map(|x| (0..g.order()).map(move |y| (x, y))).find(|&(x, y)| core.get(x, y) != other.get(x, y));
            outcomes.push(Outcome::require(diff.is_none(), || {
                let (x, y) = diff.expect("present on failure");
                format!("{}: core {x}▷{y}={} but {label} gives {}", g.name(), core.get(x, y), other.get(x, y))
            }));
        }
    }
    Ok(VerificationReport::from_outcomes("abelian core/twisted/alexander coincidence", Mode::Exact, 0, 0.0, true, outcomes))
}
