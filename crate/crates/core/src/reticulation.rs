//! The reticulation `(L(A), λ)`: the lattice of principal filters under
//! reverse inclusion, its axioms, and the functor on morphisms.

use crate::algebra::{
    check_morphism, direct_product, enumerate_morphisms, inductive_limit, Algebra, InductiveSystem, Lattice,
    Morphism, MorphismKind, ResiduatedLattice, Table,
};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::filters::{enumerate_filters, enumerate_prime_filters, principal_filter, quotient, Filter, FilterLattice};
use crate::report::{first_failure, Report};
use crate::set::ElemSet;

/// A reticulation of `source`.
#[derive(Clone, Debug)]
pub struct Reticulation<A = ResiduatedLattice> {
    pub source: A,
    pub lattice: Lattice,
    /// `λ` as an index map `source → lattice`.
    pub lambda: Vec<usize>,
    /// The principal filter behind each lattice element.
    pub filters: Vec<Filter>,
}

impl<A: Algebra> Reticulation<A> {
    pub fn lambda(&self, a: usize) -> usize {
        self.lambda[a]
    }

    /// `λ(X)`.
    pub fn image(&self, x: &ElemSet) -> ElemSet {
        x.image(&self.lambda, self.lattice.size())
    }

    /// `λ⁻¹(Y)`.
    pub fn preimage(&self, y: &ElemSet) -> ElemSet {
        y.preimage(&self.lambda)
    }
}

/// Carrier: distinct principal filters, sorted by size then members, so `{1}`
/// comes first. Order is `⊇`: meet is the filter join, join is `∩`, the bottom
/// is `<0> = A` and the top is `<1> = {1}`. Elements are labelled `<g>` with
/// `g` the least-index generator.
pub fn reticulate<A: Algebra>(alg: &A) -> Result<Reticulation<A>> {
    let n = alg.size();
    let generated: Vec<Filter> = (0..n).map(|a| principal_filter(alg, a)).collect();
    let mut filters = generated.clone();
    filters.sort();
    filters.dedup();
    let k = filters.len();
    let lambda: Vec<usize> = generated
        .iter()
        .map(|f| filters.binary_search(f).expect("present"))
        .collect();
    let find = |s: &ElemSet| {
        filters
            .iter()
            .position(|f| f.members() == s)
            .ok_or_else(|| Error::NotAReticulation(format!("{s:?} is not principal")))
    };
    let mut join = vec![vec![0; k]; k];
    let mut meet = vec![vec![0; k]; k];
    for i in 0..k {
        for j in 0..k {
            join[i][j] = find(&filters[i].members().intersection(filters[j].members()))?;
            let g = crate::filters::generated_filter(alg, &filters[i].members().union(filters[j].members()));
            meet[i][j] = find(g.members())?;
        }
    }
    let labels = (0..k)
        .map(|i| {
            let g = lambda.iter().position(|&x| x == i).expect("λ is onto");
            format!("<{}>", alg.label(g))
        })
        .collect();
    let lattice = Lattice::new(labels, Table::from_rows(&join)?, Table::from_rows(&meet)?)?;
    Ok(Reticulation { source: alg.clone(), lattice, lambda, filters })
}

/// Checks conditions 1)–5) of a reticulation and the derived properties
/// a)–c) for the candidate `(lattice, lambda)`.
pub fn verify_reticulation<A: Algebra>(alg: &A, lattice: &Lattice, lambda: &[usize]) -> Report {
    let n = alg.size();
    let mut r = Report::new();
    let l = |a: usize| alg.label(a);
    let pairs = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));
    if lambda.len() != n || lambda.iter().any(|&x| x >= lattice.size()) {
        r.push("lambda is total", Err(format!("map of length {} into {} elements", lambda.len(), lattice.size())));
        return r;
    }
    r.push_flag("lattice is distributive", lattice.is_distributive(), || {
        lattice.require_distributive().err().map(|e| e.to_string()).unwrap_or_default()
    });
    r.push(
        "1) lambda(a*b) = lambda(a) meet lambda(b)",
        first_failure(pairs(), |&(a, b)| {
            if lambda[alg.filter_op(a, b)] == lattice.meet(lambda[a], lambda[b]) {
                Ok(())
            } else {
                Err(format!("({},{})", l(a), l(b)))
            }
        }),
    );
    r.push(
        "2) lambda(a join b) = lambda(a) join lambda(b)",
        first_failure(pairs(), |&(a, b)| {
            if lambda[alg.join(a, b)] == lattice.join(lambda[a], lambda[b]) {
                Ok(())
            } else {
                Err(format!("({},{})", l(a), l(b)))
            }
        }),
    );
    r.push_flag(
        "3) lambda(0) = 0 and lambda(1) = 1",
        lambda[alg.bottom()] == lattice.bottom() && lambda[alg.top()] == lattice.top(),
        || format!("lambda(0)={}, lambda(1)={}", lattice.label(lambda[alg.bottom()]), lattice.label(lambda[alg.top()])),
    );
    let missing = (0..lattice.size()).find(|x| !lambda.contains(x));
    r.push_flag("4) lambda is surjective", missing.is_none(), || {
        format!("{} is not hit", lattice.label(missing.unwrap()))
    });
    let stab = alg.stabilization_index();
    r.push(
        "5) lambda(a) <= lambda(b) iff a^n <= b for some n",
        first_failure(pairs(), |&(a, b)| {
            let lhs = lattice.leq(lambda[a], lambda[b]);
            let rhs = (1..=stab).any(|k| alg.leq(alg.power(a, k), b));
            if lhs == rhs {
                Ok(())
            } else {
                Err(format!("({},{}): lambda side {lhs}, power side {rhs}", l(a), l(b)))
            }
        }),
    );
    r.push(
        "a) lambda is order-preserving",
        first_failure(pairs(), |&(a, b)| {
            if !alg.leq(a, b) || lattice.leq(lambda[a], lambda[b]) {
                Ok(())
            } else {
                Err(format!("({},{})", l(a), l(b)))
            }
        }),
    );
    r.push(
        "b) lambda(a meet b) = lambda(a) meet lambda(b)",
        first_failure(pairs(), |&(a, b)| {
            if lambda[alg.meet(a, b)] == lattice.meet(lambda[a], lambda[b]) {
                Ok(())
            } else {
                Err(format!("({},{})", l(a), l(b)))
            }
        }),
    );
    r.push(
        "c) lambda(a^n) = lambda(a)",
        first_failure((0..n).flat_map(|a| (1..=stab + 1).map(move |k| (a, k))), |&(a, k)| {
            if lambda[alg.power(a, k)] == lambda[a] {
                Ok(())
            } else {
                Err(format!("a={}, n={k}", l(a)))
            }
        }),
    );
    r
}

fn require_reticulation<A: Algebra>(alg: &A, lattice: &Lattice, lambda: &[usize]) -> Result<()> {
    let report = verify_reticulation(alg, lattice, lambda);
    let failure = report.failures().next().map(|c| {
        Error::NotAReticulation(format!("{} fails at {}", c.name, c.witness.clone().unwrap_or_default()))
    });
    failure.map_or(Ok(()), Err)
}

/// The isomorphism `f` with `f ∘ λ1 = λ2`, defined by `f(λ1(a)) = λ2(a)`.
pub fn reticulation_iso<A: Algebra>(
    alg: &A,
    (l1, lambda1): (&Lattice, &[usize]),
    (l2, lambda2): (&Lattice, &[usize]),
) -> Result<Morphism> {
    require_reticulation(alg, l1, lambda1)?;
    require_reticulation(alg, l2, lambda2)?;
    let mut map = vec![usize::MAX; l1.size()];
    for a in 0..alg.size() {
        let slot = &mut map[lambda1[a]];
        if *slot != usize::MAX && *slot != lambda2[a] {
            return Err(Error::NotAReticulation(format!(
                "lambda1 identifies {} with another element that lambda2 separates",
                alg.label(a)
            )));
        }
        *slot = lambda2[a];
    }
    let f = Morphism::new(l1, l2, map)?;
    if !f.is_bijective() {
        return Err(Error::NotAReticulation("induced map is not bijective".into()));
    }
    Ok(f)
}

/// `L(f)`: the lattice morphism `h` with `h ∘ λ_A = λ_B ∘ f`.
pub fn reticulate_morphism<A: Algebra>(
    f: &Morphism,
    ra: &Reticulation<A>,
    rb: &Reticulation<A>,
) -> Result<Morphism> {
    check_morphism(&ra.source, &rb.source, &f.map).map_err(Error::NotAMorphism)?;
    let mut map = vec![usize::MAX; ra.lattice.size()];
    for a in 0..ra.source.size() {
        let image = rb.lambda[f.map[a]];
        let slot = &mut map[ra.lambda[a]];
        if *slot != usize::MAX && *slot != image {
            return Err(Error::NotAMorphism(format!(
                "the square does not close at {}",
                ra.source.label(a)
            )));
        }
        *slot = image;
    }
    Morphism::new(&ra.lattice, &rb.lattice, map)
}

/// `L(id) = id` and `L(g ∘ f) = L(g) ∘ L(f)` for `f : A → B`, `g : B → C`.
pub fn check_functor_laws<A: Algebra>(
    f: &Morphism,
    g: &Morphism,
    (ra, rb, rc): (&Reticulation<A>, &Reticulation<A>, &Reticulation<A>),
) -> Result<Report> {
    let mut r = Report::new();
    let id = reticulate_morphism(&Morphism::identity(&ra.source), ra, ra)?;
    r.push_flag("L(id) = id", id == Morphism::identity(&ra.lattice), || format!("{:?}", id.map));
    let lf = reticulate_morphism(f, ra, rb)?;
    let lg = reticulate_morphism(g, rb, rc)?;
    let lgf = reticulate_morphism(&f.then(g), ra, rc)?;
    r.push_flag("L(g.f) = L(g).L(f)", lgf.map == lf.then(&lg).map, || {
        format!("{:?} vs {:?}", lgf.map, lf.then(&lg).map)
    });
    Ok(r)
}

/// `μ : ℱ(A) → ℱ(L(A))`, `μ(F) = λ(F)`, with its verification.
#[derive(Clone, Debug)]
pub struct MuIso {
    pub source: FilterLattice,
    pub target: FilterLattice,
    /// Index map between the two filter lists.
    pub map: Vec<usize>,
    pub report: Report,
}

pub fn mu_iso<A: Algebra>(ret: &Reticulation<A>, caps: &Caps) -> Result<MuIso> {
    let alg = &ret.source;
    let lat = &ret.lattice;
    let source = enumerate_filters(alg, caps)?;
    let target = enumerate_filters(lat, caps)?;
    let mut report = Report::new();
    let images: Vec<ElemSet> = source.filters.iter().map(|f| ret.image(f.members())).collect();
    report.push(
        "lambda(F) is a filter",
        first_failure(images.iter().enumerate(), |&(i, s)| {
            crate::filters::check_filter(lat, s)
                .map_err(|e| format!("{}: {e}", source.filters[i].display_with(alg.labels())))
        }),
    );
    let map: Vec<usize> = images
        .iter()
        .map(|s| target.filters.iter().position(|g| g.members() == s).unwrap_or(usize::MAX))
        .collect();
    let mut seen = vec![false; target.len()];
    let injective = map.iter().all(|&y| y != usize::MAX && !std::mem::replace(&mut seen[y], true));
    report.push_flag("mu is injective", injective, || format!("{map:?}"));
    report.push_flag("mu is surjective", seen.iter().all(|&s| s), || {
        let i = seen.iter().position(|&s| !s).unwrap();
        format!("{} is not hit", target.filters[i].display_with(lat.labels()))
    });
    let k = source.len();
    report.push(
        "F <= G iff mu(F) <= mu(G)",
        first_failure((0..k).flat_map(|i| (0..k).map(move |j| (i, j))), |&(i, j)| {
            let lhs = source.filters[i].is_subset(&source.filters[j]);
            let rhs = images[i].is_subset(&images[j]);
            if lhs == rhs {
                Ok(())
            } else {
                Err(format!(
                    "({},{})",
                    source.filters[i].display_with(alg.labels()),
                    source.filters[j].display_with(alg.labels())
                ))
            }
        }),
    );
    if injective && seen.iter().all(|&s| s) {
        report.push(
            "mu is a bounded-lattice morphism",
            check_morphism(&source.lattice, &target.lattice, &map),
        );
    }
    report.push(
        "lambda(<a>) = <lambda(a)>",
        first_failure(0..alg.size(), |&a| {
            let lhs = ret.image(principal_filter(alg, a).members());
            if &lhs == principal_filter(lat, ret.lambda[a]).members() {
                Ok(())
            } else {
                Err(alg.label(a).to_string())
            }
        }),
    );
    Ok(MuIso { source, target, map, report })
}

/// Prime filters of `L(A)` paired with their preimages under `λ`.
#[derive(Clone, Debug)]
pub struct Spectrum {
    /// `(P, λ⁻¹(P))` in the canonical order of the lattice primes.
    pub pairs: Vec<(Filter, Filter)>,
    pub report: Report,
}

pub fn spectrum_bijection<A: Algebra>(ret: &Reticulation<A>, caps: &Caps) -> Result<Spectrum> {
    let alg = &ret.source;
    let lat_primes = enumerate_prime_filters(&ret.lattice, caps)?;
    let alg_primes = enumerate_prime_filters(alg, caps)?;
    let mut report = Report::new();
    let mut pairs = Vec::new();
    let mut hit = vec![false; alg_primes.len()];
    let mut lands = true;
    for p in &lat_primes {
        let pre = ret.preimage(p.members());
        match alg_primes.iter().position(|q| q.members() == &pre) {
            Some(i) => {
                if std::mem::replace(&mut hit[i], true) {
                    lands = false;
                }
                pairs.push((p.clone(), alg_primes[i].clone()));
            }
            None => {
                lands = false;
                report.push(
                    "preimage of a prime is prime",
                    Err(p.display_with(ret.lattice.labels())),
                );
            }
        }
    }
    report.push_flag("pairing is injective onto primes of A", lands, || "collision".into());
    report.push_flag("every prime of A is hit", hit.iter().all(|&h| h), || {
        let i = hit.iter().position(|&h| !h).unwrap();
        alg_primes[i].display_with(alg.labels())
    });
    let m = pairs.len();
    report.push(
        "inclusion is preserved both ways",
        first_failure((0..m).flat_map(|i| (0..m).map(move |j| (i, j))), |&(i, j)| {
            if pairs[i].0.is_subset(&pairs[j].0) == pairs[i].1.is_subset(&pairs[j].1) {
                Ok(())
            } else {
                Err(format!(
                    "{} vs {}",
                    pairs[i].0.display_with(ret.lattice.labels()),
                    pairs[j].0.display_with(ret.lattice.labels())
                ))
            }
        }),
    );
    Ok(Spectrum { pairs, report })
}

/// `(∏ L(A_i), λ componentwise)` is a reticulation of `∏ A_i`.
pub fn product_preservation(factors: &[ResiduatedLattice], caps: &Caps) -> Result<Report> {
    let p = direct_product(factors, caps.product)?;
    let rets = factors.iter().map(reticulate).collect::<Result<Vec<_>>>()?;
    let lats: Vec<Lattice> = rets.iter().map(|r| r.lattice.clone()).collect();
    let lp = direct_product(&lats, caps.product)?;
    let lambda: Vec<usize> = (0..p.algebra.size())
        .map(|x| {
            let c: Vec<usize> = p.coords(x).iter().zip(&rets).map(|(&ci, r)| r.lambda[ci]).collect();
            lp.index(&c)
        })
        .collect();
    let mut report = verify_reticulation(&p.algebra, &lp.algebra, &lambda);
    let canonical = reticulate(&p.algebra)?;
    report.push(
        "agrees with the canonical reticulation of the product",
        reticulation_iso(&p.algebra, (&canonical.lattice, &canonical.lambda), (&lp.algebra, &lambda))
            .map(|_| ())
            .map_err(|e| e.to_string()),
    );
    Ok(report)
}

/// `h(λ(a)/λ(F)) = λ₁(a/F)` is an isomorphism `L(A)/λ(F) → L(A/F)`.
pub fn quotient_preservation(alg: &ResiduatedLattice, f: &Filter) -> Result<Report> {
    let ret = reticulate(alg)?;
    let lf = Filter::new(&ret.lattice, ret.image(f.members()))?;
    let q_lat = quotient(&ret.lattice, &lf)?;
    let q_alg = quotient(alg, f)?;
    let ret_q = reticulate(&q_alg.algebra)?;
    let mut report = Report::new();
    let mut map = vec![usize::MAX; q_lat.algebra.size()];
    let mut defined = Ok(());
    for a in 0..alg.size() {
        let x = q_lat.class_of(ret.lambda[a]);
        let y = ret_q.lambda[q_alg.class_of(a)];
        if map[x] != usize::MAX && map[x] != y {
            defined = Err(format!("at {}", alg.label(a)));
            break;
        }
        map[x] = y;
    }
    let total = defined.is_ok() && map.iter().all(|&y| y != usize::MAX);
    report.push("h is well defined", defined);
    if total {
        let h = Morphism { map, target_size: ret_q.lattice.size(), kind: MorphismKind::BoundedLattice };
        report.push("h is a bounded-lattice morphism", check_morphism(&q_lat.algebra, &ret_q.lattice, &h.map));
        report.push_flag("h is bijective", h.is_bijective(), || format!("{:?}", h.map));
    }
    Ok(report)
}

/// The image of a system under `L`, objects and transitions reticulated.
pub fn reticulate_system(
    sys: &InductiveSystem<ResiduatedLattice>,
) -> Result<(Vec<Reticulation>, InductiveSystem<Lattice>)> {
    let rets = sys.objects().iter().map(reticulate).collect::<Result<Vec<_>>>()?;
    let m = sys.len();
    let leq: Vec<Vec<bool>> = (0..m).map(|i| (0..m).map(|j| sys.leq(i, j)).collect()).collect();
    let transitions = sys
        .transitions()
        .iter()
        .map(|(&(i, j), t)| Ok(((i, j), reticulate_morphism(t, &rets[i], &rets[j])?)))
        .collect::<Result<_>>()?;
    let lsys = InductiveSystem::new(leq, rets.iter().map(|r| r.lattice.clone()).collect(), transitions)?;
    Ok((rets, lsys))
}

/// `(L(lim A_i), L(φ_i))` is a colimit of the `L`-image system.
///
/// The cocone equations are checked, and the universal property is verified
/// against every cone into each target lattice of at most `caps.cone_target`
/// elements among: the `L(A_i)`, `L(lim)`, the 2-chain and the four-element
/// Boolean lattice. Each cone must have exactly one mediating morphism.
pub fn limit_preservation(sys: &InductiveSystem<ResiduatedLattice>, caps: &Caps) -> Result<Report> {
    let lim = inductive_limit(sys, caps.product)?;
    let (rets, lsys) = reticulate_system(sys)?;
    let rlim = reticulate(&lim.algebra)?;
    let legs = lim
        .canonical
        .iter()
        .enumerate()
        .map(|(i, phi)| reticulate_morphism(phi, &rets[i], &rlim))
        .collect::<Result<Vec<_>>>()?;
    let m = sys.len();
    let mut report = Report::new();
    report.push(
        "L(phi_j) . L(phi_ij) = L(phi_i)",
        first_failure((0..m).flat_map(|i| (0..m).map(move |j| (i, j))), |&(i, j)| {
            if !sys.leq(i, j) || lsys.transition(i, j).unwrap().then(&legs[j]).map == legs[i].map {
                Ok(())
            } else {
                Err(format!("{i} <= {j}"))
            }
        }),
    );
    let two = crate::algebra::chain(2)?.lattice().clone();
    let four = crate::algebra::boolean(4)?.lattice().clone();
    let mut targets: Vec<(String, Lattice)> = rets
        .iter()
        .enumerate()
        .map(|(i, r)| (format!("L(A_{i})"), r.lattice.clone()))
        .collect();
    targets.push(("L(lim)".into(), rlim.lattice.clone()));
    targets.push(("2-chain".into(), two));
    targets.push(("2x2 Boolean lattice".into(), four));
    for (name, b) in targets {
        if b.size() > caps.cone_target {
            continue;
        }
        let candidates: Vec<Vec<Morphism>> = lsys
            .objects()
            .iter()
            .map(|li| enumerate_morphisms(li, &b, usize::MAX))
            .collect();
        let mediators = enumerate_morphisms(&rlim.lattice, &b, usize::MAX);
        let mut cones = Vec::new();
        collect_cones(&lsys, &candidates, &mut Vec::new(), &mut cones);
        let outcome = first_failure(cones.iter().enumerate(), |&(c, cone)| {
            let count = mediators
                .iter()
                .filter(|u| (0..m).all(|i| legs[i].then(u).map == cone[i].map))
                .count();
            if count == 1 {
                Ok(())
            } else {
                Err(format!("cone {c} has {count} mediating morphisms"))
            }
        });
        report.push(format!("universal property against {name} ({} cones)", cones.len()), outcome);
    }
    Ok(report)
}

fn collect_cones(
    lsys: &InductiveSystem<Lattice>,
    candidates: &[Vec<Morphism>],
    partial: &mut Vec<Morphism>,
    out: &mut Vec<Vec<Morphism>>,
) {
    let j = partial.len();
    if j == candidates.len() {
        out.push(partial.clone());
        return;
    }
    for psi in &candidates[j] {
        // Compatibility with every already chosen comparable index.
        let ok = (0..j).all(|i| {
            let below = !lsys.leq(i, j) || lsys.transition(i, j).unwrap().then(psi).map == partial[i].map;
            let above = !lsys.leq(j, i) || lsys.transition(j, i).unwrap().then(&partial[i]).map == psi.map;
            below && above
        });
        if ok {
            partial.push(psi.clone());
            collect_cones(lsys, candidates, partial, out);
            partial.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{boolean, chain, find_isomorphism};
    use crate::corpus;

    fn idx(a: &ResiduatedLattice, l: &str) -> usize {
        a.lattice().index_of(l).unwrap()
    }

    #[test]
    fn lrex3_reticulation_is_the_diamond() {
        let a = corpus::get("lrex3").unwrap();
        let r = reticulate(&a).unwrap();
        assert_eq!(r.lattice.size(), 4);
        let shown: Vec<String> = r.filters.iter().map(|f| f.display_with(a.labels())).collect();
        assert_eq!(shown, ["{1}", "{d,1}", "{a,c,1}", "{0,a,b,c,d,1}"]);
        assert_eq!(r.lattice.labels(), ["<1>", "<d>", "<a>", "<0>"]);
        let b4 = boolean(4).unwrap().lattice().clone();
        assert!(find_isomorphism(&r.lattice, &b4).unwrap().is_some());
        assert_eq!(r.lattice.top(), 0);
        assert_eq!(r.lambda(idx(&a, "b")), r.lattice.bottom());
        assert!(verify_reticulation(&a, &r.lattice, &r.lambda).all_passed());
    }

    #[test]
    fn chain_reticulation_is_the_chain() {
        for n in 1..=6 {
            let c = chain(n).unwrap();
            let r = reticulate(&c).unwrap();
            assert!(find_isomorphism(&r.lattice, c.lattice()).unwrap().is_some());
        }
    }

    #[test]
    fn identity_candidate_fails_condition_five_at_b_0() {
        let a = corpus::get("lrex3").unwrap();
        let id: Vec<usize> = (0..6).collect();
        let report = verify_reticulation(&a, a.lattice(), &id);
        let c5 = report.get("5) lambda(a) <= lambda(b) iff a^n <= b for some n").unwrap();
        assert!(!c5.passed);
        assert!(c5.witness.as_deref().unwrap().starts_with("(b,0)"));
        let t = chain(1).unwrap();
        let rt = reticulate(&t).unwrap();
        assert_eq!(rt.lattice.size(), 1);
        assert!(verify_reticulation(&t, &rt.lattice, &rt.lambda).all_passed());
    }

    #[test]
    fn uniqueness_recovers_a_permutation() {
        let a = corpus::get("lrex3").unwrap();
        let r = reticulate(&a).unwrap();
        let perm = vec![2, 0, 3, 1];
        let l2 = r.lattice.relabel(&perm).unwrap();
        let lambda2: Vec<usize> = r.lambda.iter().map(|&x| perm[x]).collect();
        let f = reticulation_iso(&a, (&r.lattice, &r.lambda), (&l2, &lambda2)).unwrap();
        assert_eq!(f.map, perm);
        let id = reticulation_iso(&a, (&r.lattice, &r.lambda), (&r.lattice, &r.lambda)).unwrap();
        assert_eq!(id, Morphism::identity(&r.lattice));
        let bad: Vec<usize> = (0..6).collect();
        assert!(matches!(
            reticulation_iso(&a, (&r.lattice, &r.lambda), (a.lattice(), &bad)),
            Err(Error::NotAReticulation(_))
        ));
    }

    #[test]
    fn quotient_projection_square() {
        let a = corpus::get("lrex0_5").unwrap();
        let f = Filter::new(&a, ElemSet::from_iter(5, [idx(&a, "c"), idx(&a, "1")])).unwrap();
        let q = quotient(&a, &f).unwrap();
        let (ra, rq) = (reticulate(&a).unwrap(), reticulate(&q.algebra).unwrap());
        let h = reticulate_morphism(&q.projection, &ra, &rq).unwrap();
        assert!(h.is_surjective());
        assert_eq!(rq.lattice.size(), 3);
        // Chase the square by hand.
        for x in 0..5 {
            assert_eq!(h.map[ra.lambda[x]], rq.lambda[q.projection.map[x]]);
        }
        let laws = check_functor_laws(&q.projection, &Morphism::identity(&q.algebra), (&ra, &rq, &rq)).unwrap();
        assert!(laws.all_passed(), "{laws}");
    }

    #[test]
    fn mu_and_spectrum() {
        let caps = Caps::default();
        for (key, filters, primes) in [("lrex3", 4, 2), ("chain:1", 1, 0), ("chain:4", 4, 3), ("chain:3", 3, 2)] {
            let a = corpus::get(key).unwrap();
            let r = reticulate(&a).unwrap();
            let mu = mu_iso(&r, &caps).unwrap();
            assert!(mu.report.all_passed(), "{key}: {}", mu.report);
            assert_eq!(mu.source.len(), filters);
            let s = spectrum_bijection(&r, &caps).unwrap();
            assert!(s.report.all_passed(), "{key}: {}", s.report);
            assert_eq!(s.pairs.len(), primes);
        }
        // lrex3: the two primes are incomparable.
        let r = reticulate(&corpus::get("lrex3").unwrap()).unwrap();
        let s = spectrum_bijection(&r, &caps).unwrap();
        assert!(!s.pairs[0].1.is_subset(&s.pairs[1].1) && !s.pairs[1].1.is_subset(&s.pairs[0].1));
    }

    #[test]
    fn product_and_quotient_preservation() {
        let caps = Caps::default();
        let a = corpus::get("lrex0").unwrap();
        let rep = product_preservation(&[a, chain(2).unwrap()], &caps).unwrap();
        assert!(rep.all_passed(), "{rep}");
        let b = corpus::get("lrex0_5").unwrap();
        let f = Filter::new(&b, ElemSet::from_iter(5, [idx(&b, "c"), idx(&b, "1")])).unwrap();
        let rep = quotient_preservation(&b, &f).unwrap();
        assert!(rep.all_passed(), "{rep}");
    }

    #[test]
    fn projection_of_a_product_commutes_with_l() {
        let caps = Caps::default();
        let (a, c) = (corpus::get("lrex0").unwrap(), chain(3).unwrap());
        let p = direct_product(&[a.clone(), c.clone()], caps.product).unwrap();
        let (rp, ra, rc) = (reticulate(&p.algebra).unwrap(), reticulate(&a).unwrap(), reticulate(&c).unwrap());
        let lp = direct_product(&[ra.lattice.clone(), rc.lattice.clone()], caps.product).unwrap();
        // L(π_1) against the first projection of L(A) × L(C), through the
        // identification L(A × C) ≅ L(A) × L(C).
        let l_pi = reticulate_morphism(&p.projections[0], &rp, &ra).unwrap();
        let lambda: Vec<usize> = (0..p.algebra.size())
            .map(|x| {
                let cs = p.coords(x);
                lp.index(&[ra.lambda[cs[0]], rc.lambda[cs[1]]])
            })
            .collect();
        let iso = reticulation_iso(&p.algebra, (&rp.lattice, &rp.lambda), (&lp.algebra, &lambda)).unwrap();
        assert_eq!(l_pi.map, iso.then(&lp.projections[0]).map);
    }
}
