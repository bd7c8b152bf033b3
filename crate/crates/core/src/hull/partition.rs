//! Finite partitions of `CoAnn(A)`, the products `A_𝒞` and the transitions
//! between them.

use crate::algebra::{direct_product_with, Algebra, Morphism, Product};
use crate::coann::CoannAlgebra;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::filters::{quotient, Quotient};

/// A set of pairwise disjoint nonzero members of a Boolean algebra joining to
/// its top. Blocks are indices into the co-annihilator carrier, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    blocks: Vec<usize>,
}

impl Partition {
    /// Checks the partition laws against `base`.
    pub fn new(base: &CoannAlgebra, mut blocks: Vec<usize>) -> Result<Partition> {
        blocks.sort_unstable();
        blocks.dedup();
        let lat = &base.lattice;
        let bad = |m: String| Err(Error::InvalidPartition(m));
        if let Some(&b) = blocks.iter().find(|&&b| b >= base.len()) {
            return bad(format!("block index {b} out of range"));
        }
        if blocks.contains(&base.bottom()) {
            return bad("the bottom {1} is not a block".into());
        }
        for (i, &x) in blocks.iter().enumerate() {
            for &y in &blocks[i + 1..] {
                if lat.meet(x, y) != base.bottom() {
                    return bad(format!("blocks {} and {} overlap", lat.label(x), lat.label(y)));
                }
            }
        }
        let join = blocks.iter().fold(base.bottom(), |acc, &b| lat.join(acc, b));
        if join != base.top() {
            return bad(format!("blocks join to {}", lat.label(join)));
        }
        Ok(Partition { blocks })
    }

    /// `{C, C^⊤}` with a bottom block dropped, so `C ∈ {{1}, A}` gives `{A}`.
    pub fn two_block(base: &CoannAlgebra, c: usize) -> Result<Partition> {
        let blocks = [c, base.complement[c]]
            .into_iter()
            .filter(|&b| b != base.bottom())
            .collect();
        Partition::new(base, blocks)
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Whether `finer` refines `self`: every block of `finer` lies in a block
    /// of `self`.
    pub fn is_refined_by(&self, finer: &Partition, base: &CoannAlgebra) -> bool {
        self.refinement_map(finer, base).is_ok()
    }

    /// `k_pq`: for each block of `finer`, the position of the unique block of
    /// `self` containing it.
    pub fn refinement_map(&self, finer: &Partition, base: &CoannAlgebra) -> Result<Vec<usize>> {
        finer
            .blocks
            .iter()
            .map(|&d| {
                let mut above = self.blocks.iter().enumerate().filter(|&(_, &c)| base.lattice.leq(d, c));
                match (above.next(), above.next()) {
                    (Some((k, _)), None) => Ok(k),
                    (None, _) => Err(Error::NotRefinement(format!(
                        "block {} lies in no block of the coarser partition",
                        base.lattice.label(d)
                    ))),
                    (Some(_), Some(_)) => Err(Error::NotRefinement(format!(
                        "block {} lies in two blocks",
                        base.lattice.label(d)
                    ))),
                }
            })
            .collect()
    }

    pub fn display(&self, base: &CoannAlgebra) -> String {
        let parts: Vec<&str> = self.blocks.iter().map(|&b| base.lattice.label(b)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// `Π(A)` with the refinement order; the finest partition (the atoms) is last.
#[derive(Clone, Debug)]
pub struct PartitionPoset {
    pub base: CoannAlgebra,
    pub partitions: Vec<Partition>,
    /// `leq[i][j]` iff partition `j` refines partition `i`.
    pub leq: Vec<Vec<bool>>,
}

impl PartitionPoset {
    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.partitions.binary_search_by(|q| sort_key(q).cmp(&sort_key(p))).ok()
    }

    pub fn finest(&self) -> usize {
        self.partitions.len() - 1
    }

    pub fn refinement_map(&self, i: usize, j: usize) -> Result<Vec<usize>> {
        self.partitions[i].refinement_map(&self.partitions[j], &self.base)
    }
}

fn sort_key(p: &Partition) -> (usize, &[usize]) {
    (p.blocks.len(), &p.blocks)
}

/// Restricted growth strings of length `k`: the set partitions of `0..k`.
fn restricted_growth_strings(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, k: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for v in 0..=max + 1 {
            prefix.push(v);
            go(prefix, k, max.max(v), out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        out.push(Vec::new());
    } else {
        let mut prefix = vec![0];
        go(&mut prefix, k, 0, &mut out);
    }
    out
}

/// All finite partitions of `base`, from the set partitions of its atoms,
/// sorted by (block count, blocks).
pub fn enumerate_partitions(base: &CoannAlgebra, caps: &Caps) -> Result<PartitionPoset> {
    let atoms = base.atoms();
    if atoms.len() > caps.partition_atoms {
        return Err(Error::CapExceeded {
            what: "partition enumeration (atoms)".into(),
            size: atoms.len(),
            cap: caps.partition_atoms,
        });
    }
    let lat = &base.lattice;
    let mut partitions = Vec::new();
    if atoms.is_empty() {
        // Trivial host: CoAnn has one element and the empty set is its only
        // partition.
        partitions.push(Partition { blocks: Vec::new() });
    } else {
        for rgs in restricted_growth_strings(atoms.len()) {
            let groups = rgs.iter().max().map_or(0, |m| m + 1);
            let blocks = (0..groups)
                .map(|g| {
                    atoms
                        .iter()
                        .zip(&rgs)
                        .filter(|&(_, &r)| r == g)
                        .fold(base.bottom(), |acc, (&a, _)| lat.join(acc, a))
                })
                .collect();
            partitions.push(Partition::new(base, blocks)?);
        }
    }
    partitions.sort_by(|p, q| sort_key(p).cmp(&sort_key(q)));
    let m = partitions.len();
    let leq = (0..m)
        .map(|i| (0..m).map(|j| partitions[i].is_refined_by(&partitions[j], base)).collect())
        .collect();
    Ok(PartitionPoset { base: base.clone(), partitions, leq })
}

/// `A_𝒞 = ∏_{C∈𝒞} A/(C^⊤)` with the factors in block order.
#[derive(Clone, Debug)]
pub struct PartitionProduct<A> {
    pub partition: Partition,
    pub quotients: Vec<Quotient<A>>,
    pub product: Product<A>,
}

impl<A: Algebra> PartitionProduct<A> {
    pub fn algebra(&self) -> &A {
        &self.product.algebra
    }

    pub fn coords(&self, x: usize) -> Vec<usize> {
        self.product.coords(x)
    }

    pub fn index(&self, coords: &[usize]) -> usize {
        self.product.index(coords)
    }

    /// `(a/C^⊤)_C`.
    pub fn diagonal(&self, a: usize) -> usize {
        let c: Vec<usize> = self.quotients.iter().map(|q| q.class_of(a)).collect();
        self.index(&c)
    }

    /// The element that is `0` on the blocks where `zero(k)` holds and `1`
    /// elsewhere.
    pub fn zero_one(&self, zero: impl Fn(usize) -> bool) -> usize {
        let c: Vec<usize> = self
            .quotients
            .iter()
            .enumerate()
            .map(|(k, q)| if zero(k) { q.algebra.bottom() } else { q.algebra.top() })
            .collect();
        self.index(&c)
    }
}

pub fn partition_product<A: Algebra>(
    alg: &A,
    base: &CoannAlgebra,
    p: &Partition,
    caps: &Caps,
) -> Result<PartitionProduct<A>> {
    if p.is_empty() {
        // Only the trivial host has the empty partition; its product is itself.
        let q = quotient(alg, &base.carrier[base.top()])?;
        let product = direct_product_with(std::slice::from_ref(&q.algebra), caps.product, caps.strategy)?;
        return Ok(PartitionProduct { partition: p.clone(), quotients: vec![q], product });
    }
    let quotients = p
        .blocks
        .iter()
        .map(|&c| quotient(alg, &base.carrier[base.complement[c]]))
        .collect::<Result<Vec<_>>>()?;
    let factors: Vec<A> = quotients.iter().map(|q| q.algebra.clone()).collect();
    let product = direct_product_with(&factors, caps.product, caps.strategy)?;
    Ok(PartitionProduct { partition: p.clone(), quotients, product })
}

/// `𝒫_𝒞𝒟 : A_𝒞 → A_𝒟`, copying each coordinate to the finer blocks inside
/// it. Checked to be an injective morphism.
pub fn transition_morphism<A: Algebra>(
    base: &CoannAlgebra,
    src: &PartitionProduct<A>,
    tgt: &PartitionProduct<A>,
) -> Result<Morphism> {
    let k = if src.partition.is_empty() {
        vec![0; tgt.quotients.len()]
    } else {
        src.partition.refinement_map(&tgt.partition, base)?
    };
    let map = (0..src.algebra().size())
        .map(|x| {
            let cx = src.coords(x);
            let cy: Vec<usize> = k
                .iter()
                .zip(&tgt.quotients)
                .map(|(&kj, q)| q.class_of(src.quotients[kj].representative(cx[kj])))
                .collect();
            tgt.index(&cy)
        })
        .collect();
    let m = Morphism::new(src.algebra(), tgt.algebra(), map)?;
    if !m.is_injective() {
        return Err(Error::NotAMorphism(format!(
            "transition {} -> {} is not injective",
            src.partition.display(base),
            tgt.partition.display(base)
        )));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{boolean, chain};
    use crate::coann::coann_algebra;
    use crate::corpus;

    fn bell(k: usize) -> usize {
        // Bell triangle.
        let mut row = vec![1usize];
        for _ in 0..k {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                let v = next.last().unwrap() + x;
                next.push(v);
            }
            row = next;
        }
        row[0]
    }

    #[test]
    fn rgs_counts_are_bell_numbers() {
        for k in 0..=6 {
            assert_eq!(restricted_growth_strings(k).len(), bell(k), "k={k}");
        }
    }

    #[test]
    fn lrex0_5_has_two_partitions() {
        let a = corpus::get("lrex0_5").unwrap();
        let base = coann_algebra(&a, &Caps::default()).unwrap();
        let poset = enumerate_partitions(&base, &Caps::default()).unwrap();
        let shown: Vec<String> = poset.partitions.iter().map(|p| p.display(&base)).collect();
        assert_eq!(shown, ["{{0,a,b,c,1}}", "{{b,1}, {c,1}}"]);
        assert_eq!(poset.leq, vec![vec![true, true], vec![false, true]]);
        assert_eq!(poset.refinement_map(0, 1).unwrap(), vec![0, 0]);
        assert!(matches!(poset.refinement_map(1, 0), Err(Error::NotRefinement(_))));
    }

    #[test]
    fn boolean_bases() {
        let caps = Caps::default();
        let two = coann_algebra(&chain(2).unwrap(), &caps).unwrap();
        assert_eq!(enumerate_partitions(&two, &caps).unwrap().len(), 1);
        let eight = coann_algebra(&boolean(8).unwrap(), &caps).unwrap();
        let poset = enumerate_partitions(&eight, &caps).unwrap();
        assert_eq!(poset.len(), 5);
        // Oracle: the coarsest partition is below every other one, the finest
        // above every other one.
        assert!((0..5).all(|j| poset.leq[0][j] && poset.leq[j][4]));
        let trivial = coann_algebra(&chain(1).unwrap(), &caps).unwrap();
        assert_eq!(enumerate_partitions(&trivial, &caps).unwrap().len(), 1);
    }

    #[test]
    fn partition_laws_are_checked() {
        let a = corpus::get("lrex0_5").unwrap();
        let base = coann_algebra(&a, &Caps::default()).unwrap();
        assert!(matches!(Partition::new(&base, vec![1]), Err(Error::InvalidPartition(_))));
        assert!(matches!(Partition::new(&base, vec![1, 3]), Err(Error::InvalidPartition(_))));
        assert!(matches!(Partition::new(&base, vec![0, 3]), Err(Error::InvalidPartition(_))));
        assert_eq!(Partition::two_block(&base, 0).unwrap().blocks(), &[3]);
        assert_eq!(Partition::two_block(&base, 1).unwrap().blocks(), &[1, 2]);
    }

    #[test]
    fn transitions_of_lrex0_5() {
        let caps = Caps::default();
        let a = corpus::get("lrex0_5").unwrap();
        let base = coann_algebra(&a, &caps).unwrap();
        let poset = enumerate_partitions(&base, &caps).unwrap();
        let coarse = partition_product(&a, &base, &poset.partitions[0], &caps).unwrap();
        let fine = partition_product(&a, &base, &poset.partitions[1], &caps).unwrap();
        assert_eq!(coarse.algebra().size(), 5);
        assert_eq!(fine.algebra().size(), 9);
        let t = transition_morphism(&base, &coarse, &fine).unwrap();
        let images: Vec<&str> = t.map.iter().map(|&y| fine.algebra().label(y)).collect();
        assert_eq!(images, ["(0,0)", "(a,a)", "(a,1)", "(1,a)", "(1,1)"]);
        let id = transition_morphism(&base, &fine, &fine).unwrap();
        assert_eq!(id.map, (0..9).collect::<Vec<_>>());
        assert!(matches!(transition_morphism(&base, &fine, &coarse), Err(Error::NotRefinement(_))));
    }
}
