//! Named verification suites run by the command line and the acceptance test.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{chain, Algebra, ResiduatedLattice};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::filters::enumerate_filters;
use crate::hull::{build_hull, enumerate_partitions, hull_lemma_report, hull_preservation_check, partition_system};
use crate::report::Report;
use crate::reticulation::{
    check_functor_laws, limit_preservation, product_preservation, quotient_preservation, reticulate,
    reticulation_iso, verify_reticulation,
};
use crate::stone::{classify_stone, ClassifyOptions};
use crate::transfer::transfer_report;
use crate::Morphism;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    ReticulationAxioms,
    Transfer,
    HullLemmas,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 4] = ["reticulation-axioms", "transfer", "hull-lemmas", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ReticulationAxioms => Self::NAMES[0],
            Suite::Transfer => Self::NAMES[1],
            Suite::HullLemmas => Self::NAMES[2],
            Suite::All => Self::NAMES[3],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        match s {
            "reticulation-axioms" => Ok(Suite::ReticulationAxioms),
            "transfer" => Ok(Suite::Transfer),
            "hull-lemmas" => Ok(Suite::HullLemmas),
            "all" => Ok(Suite::All),
            other => Err(Error::UnknownKey(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SuiteOptions {
    pub exhaustive_subsets: bool,
}

pub fn run_suite(suite: Suite, alg: &ResiduatedLattice, caps: &Caps, opts: SuiteOptions) -> Result<Report> {
    match suite {
        Suite::ReticulationAxioms => reticulation_suite(alg, caps),
        Suite::Transfer => transfer_suite(alg, caps, opts),
        Suite::HullLemmas => hull_suite(alg, caps),
        Suite::All => {
            let mut r = Report::new();
            for s in [Suite::ReticulationAxioms, Suite::Transfer, Suite::HullLemmas] {
                r.extend(s.name(), run_suite(s, alg, caps, opts)?);
            }
            Ok(r)
        }
    }
}

/// Axioms 1)-5) and a)-c), uniqueness, functor laws on the identity and the
/// quotient projections, and preservation of products, quotients and the
/// inductive limit of the partition system.
pub fn reticulation_suite(alg: &ResiduatedLattice, caps: &Caps) -> Result<Report> {
    let ret = reticulate(alg)?;
    let mut r = verify_reticulation(alg, &ret.lattice, &ret.lambda);
    r.push(
        "uniqueness: the induced map is the identity",
        reticulation_iso(alg, (&ret.lattice, &ret.lambda), (&ret.lattice, &ret.lambda))
            .map_err(|e| e.to_string())
            .and_then(|f| {
                if f == Morphism::identity(&ret.lattice) {
                    Ok(())
                } else {
                    Err(format!("{:?}", f.map))
                }
            }),
    );
    let filters = enumerate_filters(alg, caps)?;
    for f in &filters.filters {
        let name = f.display_with(alg.labels());
        r.extend(&format!("quotient by {name}"), quotient_preservation(alg, f)?);
        let q = crate::filters::quotient(alg, f)?;
        let rq = reticulate(&q.algebra)?;
        let id = Morphism::identity(&q.algebra);
        r.extend(&format!("functor laws through A/{name}"), check_functor_laws(&q.projection, &id, (&ret, &rq, &rq))?);
    }
    let two = chain(2)?;
    if alg.size() * 2 <= caps.product {
        r.extend("product with the 2-chain", product_preservation(&[alg.clone(), two], caps)?);
    }
    let base = crate::coann::coann_algebra(alg, caps)?;
    let partitions = enumerate_partitions(&base, caps)?;
    if partitions.len() <= caps.limit_index {
        let (_, sys) = partition_system(alg, &partitions, caps)?;
        r.extend("limit of the partition system", limit_preservation(&sys, caps)?);
    }
    Ok(r)
}

/// Everything carried across `λ`, plus agreement of the five m-conditions.
pub fn transfer_suite(alg: &ResiduatedLattice, caps: &Caps, opts: SuiteOptions) -> Result<Report> {
    let ret = reticulate(alg)?;
    let mut r = transfer_report(&ret, caps)?;
    if opts.exhaustive_subsets {
        let o = ClassifyOptions { exhaustive_subsets: true, reticulation_side: false };
        let sa = classify_stone(alg, caps, o)?;
        let sl = classify_stone(&ret.lattice, caps, o)?;
        for (side, s) in [("A", &sa), ("L(A)", &sl)] {
            if let Some(v) = &s.m_conditions.exhaustive {
                r.push_flag(format!("subset scan agrees on {side}"), v.holds, || v.witness.clone().unwrap_or_default());
            }
        }
    }
    Ok(r)
}

/// The hull construction, its lemmas and its preservation by `L`.
pub fn hull_suite<A: Algebra>(alg: &A, caps: &Caps) -> Result<Report> {
    let hull = build_hull(alg, caps)?;
    let mut r = hull_lemma_report(&hull, caps)?;
    r.extend("preservation", hull_preservation_check(alg, caps)?);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn names_round_trip() {
        for n in Suite::NAMES {
            assert_eq!(n.parse::<Suite>().unwrap().name(), n);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn all_suites_pass_on_small_corpus() {
        let caps = Caps::default();
        for key in ["lrex0", "lrex0_5", "lrex3", "chain:3"] {
            let a = corpus::get(key).unwrap();
            let r = run_suite(Suite::All, &a, &caps, SuiteOptions { exhaustive_subsets: true }).unwrap();
            assert!(r.all_passed(), "{key}:\n{r}");
        }
    }
}
