//! The strongly co-Stone hull `Ã = lim A_𝒞` over the finite partitions of
//! `CoAnn(A)`.
//!
//! The refinement order on a finite Boolean algebra has a maximum, the
//! partition into atoms, so `Ã` is the product at that partition. The generic
//! inductive limit over the whole system is built as well when the system is
//! small, and the two are compared.

mod lemmas;
mod partition;

use std::collections::BTreeMap;

use crate::algebra::{find_isomorphism_with, inductive_limit, Algebra, InductiveLimit, InductiveSystem, Morphism};
use crate::coann::{coann_algebra, CoannAlgebra};
use crate::config::Caps;
use crate::error::Result;
use crate::report::Report;

pub use lemmas::{
    boolean_element, codensity, boolean_join_check, decompose, epsilon_star, hull_lemma_report, hull_preservation_check,
    intersection_check, two_block_remark, Codensity, Decomposition,
};
pub use partition::{
    enumerate_partitions, partition_product, transition_morphism, Partition, PartitionPoset, PartitionProduct,
};

#[derive(Clone, Debug)]
pub struct Hull<A> {
    pub source: A,
    pub partitions: PartitionPoset,
    /// `A_𝒟` for the finest partition `𝒟`; this is `Ã`.
    pub top: PartitionProduct<A>,
    /// `ε : A → Ã`.
    pub epsilon: Morphism,
    /// `[(0/C^⊤, 1/C)]` per co-annihilator `C`, built at `{C, C^⊤}` and
    /// carried into `Ã` by the transition.
    pub boolean: Vec<usize>,
    /// The inductive limit over all of `Π(A)`, when it was built.
    pub reference: Option<InductiveLimit<A>>,
    /// Construction checks, including the comparison with `reference`.
    pub report: Report,
}

impl<A: Algebra> Hull<A> {
    pub fn algebra(&self) -> &A {
        self.top.algebra()
    }

    pub fn base(&self) -> &CoannAlgebra {
        &self.partitions.base
    }

    pub fn epsilon(&self, a: usize) -> usize {
        self.epsilon.map[a]
    }

    /// `A_𝒞` for a partition of the base together with `𝒫_𝒞𝒟` into `Ã`.
    pub fn product_at(&self, p: &Partition, caps: &Caps) -> Result<(PartitionProduct<A>, Morphism)> {
        let prod = partition_product(&self.source, self.base(), p, caps)?;
        let t = transition_morphism(self.base(), &prod, &self.top)?;
        Ok((prod, t))
    }
}

pub fn build_hull<A: Algebra>(alg: &A, caps: &Caps) -> Result<Hull<A>> {
    let base = coann_algebra(alg, caps)?;
    let partitions = enumerate_partitions(&base, caps)?;
    let finest = partitions.finest();
    let top = partition_product(alg, &base, &partitions.partitions[finest], caps)?;
    let n = alg.size();
    let mut report = Report::new();
    let eps_map: Vec<usize> = (0..n).map(|a| top.diagonal(a)).collect();
    report.push("epsilon is a morphism", crate::algebra::check_morphism(alg, top.algebra(), &eps_map));
    let epsilon = Morphism { map: eps_map, target_size: top.algebra().size(), kind: crate::algebra::MorphismKind::of::<A>() };
    report.push_flag("epsilon is injective", epsilon.is_injective(), || {
        let (a, b) = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| epsilon.map[a] == epsilon.map[b])
            .unwrap();
        format!("epsilon({}) = epsilon({})", alg.label(a), alg.label(b))
    });
    let mut at_two_blocks: BTreeMap<Partition, (PartitionProduct<A>, Morphism)> = BTreeMap::new();
    let mut boolean = Vec::with_capacity(base.len());
    for c in 0..base.len() {
        let p = Partition::two_block(&base, c)?;
        if !at_two_blocks.contains_key(&p) {
            let prod = partition_product(alg, &base, &p, caps)?;
            let t = transition_morphism(&base, &prod, &top)?;
            at_two_blocks.insert(p.clone(), (prod, t));
        }
        let (prod, t) = &at_two_blocks[&p];
        boolean.push(t.map[prod.zero_one(|k| p.blocks()[k] == c)]);
    }
    let reference = if partitions.len() <= caps.limit_index {
        Some(reference_limit(alg, &partitions, &top, &epsilon, caps, &mut report)?)
    } else {
        None
    };
    Ok(Hull { source: alg.clone(), partitions, top, epsilon, boolean, reference, report })
}

/// `((A_𝒞)_𝒞, (𝒫_𝒞𝒟)_{𝒞≤𝒟})` over all of `Π(A)`.
pub fn partition_system<A: Algebra>(
    alg: &A,
    partitions: &PartitionPoset,
    caps: &Caps,
) -> Result<(Vec<PartitionProduct<A>>, InductiveSystem<A>)> {
    let base = &partitions.base;
    let m = partitions.len();
    let products = caps
        .strategy
        .map(m, |i| partition_product(alg, base, &partitions.partitions[i], caps))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let mut transitions = BTreeMap::new();
    for i in 0..m {
        for j in 0..m {
            if partitions.leq[i][j] {
                transitions.insert((i, j), transition_morphism(base, &products[i], &products[j])?);
            }
        }
    }
    let objects = products.iter().map(|p| p.algebra().clone()).collect();
    let sys = InductiveSystem::new(partitions.leq.clone(), objects, transitions)?;
    Ok((products, sys))
}

/// Builds every `A_𝒞` and `𝒫_𝒞𝒟`, takes the inductive limit and compares it
/// with the product at the finest partition.
fn reference_limit<A: Algebra>(
    alg: &A,
    partitions: &PartitionPoset,
    top: &PartitionProduct<A>,
    epsilon: &Morphism,
    caps: &Caps,
    report: &mut Report,
) -> Result<InductiveLimit<A>> {
    let base = &partitions.base;
    let (products, sys) = partition_system(alg, partitions, caps)?;
    let limit = inductive_limit(&sys, caps.product.saturating_mul(caps.limit_index))?;
    let finest = partitions.finest();
    report.push_flag("the finest partition is the maximum of the system", limit.maximum == finest, || {
        format!("maximum {} but finest {finest}", limit.maximum)
    });
    report.push(
        "limit -> A_finest is an isomorphism",
        crate::algebra::check_morphism(&limit.algebra, top.algebra(), &limit.to_maximum.map).and_then(|()| {
            if limit.to_maximum.is_bijective() {
                Ok(())
            } else {
                Err("not bijective".into())
            }
        }),
    );
    if limit.algebra.size() <= caps.iso_search {
        let found = find_isomorphism_with(&limit.algebra, top.algebra(), caps.iso_search)?;
        report.push_flag("limit is isomorphic to the fast-path hull (search)", found.is_some(), || "no isomorphism".into());
    }
    // ε does not depend on the partition it is computed at.
    let n = alg.size();
    let mut well_defined = Ok(());
    'outer: for (i, prod) in products.iter().enumerate() {
        for a in 0..n {
            let at_i = prod.diagonal(a);
            let via_t = sys.transition(i, finest).expect("finest is the maximum").map[at_i];
            let via_limit = limit.to_maximum.map[limit.canonical[i].map[at_i]];
            if via_t != epsilon.map[a] || via_limit != epsilon.map[a] {
                well_defined = Err(format!(
                    "{} at partition {}",
                    alg.label(a),
                    partitions.partitions[i].display(base)
                ));
                break 'outer;
            }
        }
    }
    report.push("epsilon agrees across partitions", well_defined);
    Ok(limit)
}
