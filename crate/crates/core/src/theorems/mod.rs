//! Executable checks of the polar identities, corpus generators and the
//! exhaustive Mahler-product search.

mod checks;
mod generate;
mod search;

use std::fmt;

use crate::geometry::LatticeSet;

pub use checks::{
    check_facets_parallel, check_hull_monotone, check_inclusion_reversal,
    check_intersection_identity, check_self_dual, check_union_identity, check_union_lemma,
};
pub use generate::{
    corpus, random_cclass, random_cclass_pair, random_graph_hyperplane, random_point_pair,
    random_table2_config, PairKind, RETRY_BUDGET,
};
pub use search::{search_min_mahler, SearchResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Fails,
    Inapplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Inapplicable => "inapplicable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one check; a failing verdict always carries the offending sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub verdict: Verdict,
    pub witness: Option<Vec<(String, LatticeSet)>>,
    pub detail: String,
}

impl CheckReport {
    pub(crate) fn holds(name: &'static str, detail: impl Into<String>) -> Self {
        CheckReport {
            name,
            verdict: Verdict::Holds,
            witness: None,
            detail: detail.into(),
        }
    }

    pub(crate) fn fails(
        name: &'static str,
        detail: impl Into<String>,
        witness: Vec<(&str, LatticeSet)>,
    ) -> Self {
        CheckReport {
            name,
            verdict: Verdict::Fails,
            witness: Some(
                witness
                    .into_iter()
                    .map(|(k, v)| (k.to_string(), v))
                    .collect(),
            ),
            detail: detail.into(),
        }
    }

    pub(crate) fn inapplicable(name: &'static str, detail: impl Into<String>) -> Self {
        CheckReport {
            name,
            verdict: Verdict::Inapplicable,
            witness: None,
            detail: detail.into(),
        }
    }

    pub fn is_fail(&self) -> bool {
        self.verdict == Verdict::Fails
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} ({})", self.name, self.verdict, self.detail)?;
        if let Some(w) = &self.witness {
            for (label, set) in w {
                write!(f, "\n  {label} = {set}")?;
            }
        }
        Ok(())
    }
}
