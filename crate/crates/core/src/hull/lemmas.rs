//! Properties of `Ã`: `ε(a)^*`, the decomposition of hull elements,
//! co-density, and preservation of the hull by the reticulation.

use super::{build_hull, Hull, Partition};
use crate::algebra::{check_morphism, find_isomorphism_with, Algebra, Lattice};
use crate::coann::{boolean_center, coannihilator, CoannAlgebra};
use crate::config::Caps;
use crate::error::Result;
use crate::filters::principal_filter;
use crate::report::{first_failure, Report};
use crate::reticulation::reticulate;
use crate::set::ElemSet;
use crate::stone::{classify_stone, coann_iso, ClassifyOptions};

/// `[(0/C^⊤, 1/C)]` for the co-annihilator with carrier index `c`.
pub fn boolean_element<A: Algebra>(hull: &Hull<A>, c: usize) -> usize {
    hull.boolean[c]
}

/// The same element read off the finest partition: `0` on the atoms below `C`.
fn boolean_element_direct<A: Algebra>(hull: &Hull<A>, c: usize) -> usize {
    let base = hull.base();
    let blocks = hull.top.partition.blocks();
    hull.top.zero_one(|k| blocks.get(k).is_some_and(|&b| base.lattice.leq(b, c)) || (blocks.is_empty() && c == base.top()))
}

/// `ε(a)^* = [(0/a^⊤⊤, 1/a^⊤)]`, that is the Boolean element of the block `a^⊤`.
pub fn epsilon_star<A: Algebra>(hull: &Hull<A>, a: usize) -> usize {
    boolean_element(hull, hull.base().element[a])
}

/// `x = ⋀ (ε(a_i) ∨ e_i)` over the blocks of the finest partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// `(a_i, e_i)` per block.
    pub parts: Vec<(usize, usize)>,
}

impl Decomposition {
    pub fn evaluate<A: Algebra>(&self, hull: &Hull<A>) -> usize {
        let h = hull.algebra();
        self.parts
            .iter()
            .fold(h.top(), |acc, &(a, e)| h.meet(acc, h.join(hull.epsilon(a), e)))
    }

    /// `e_i ∨ e_j = 1` for `i ≠ j`, `⋀ e_i = 0`, and the meet gives `x`.
    pub fn check<A: Algebra>(&self, hull: &Hull<A>, x: usize) -> Result<(), String> {
        let h = hull.algebra();
        for (i, &(_, ei)) in self.parts.iter().enumerate() {
            for &(_, ej) in &self.parts[i + 1..] {
                if h.join(ei, ej) != h.top() {
                    return Err(format!("{} ∨ {} != 1", h.label(ei), h.label(ej)));
                }
            }
        }
        let all = self.parts.iter().fold(h.top(), |acc, &(_, e)| h.meet(acc, e));
        if !self.parts.is_empty() && all != h.bottom() {
            return Err(format!("meet of the e_i is {}", h.label(all)));
        }
        let got = self.evaluate(hull);
        if got != x {
            return Err(format!("{} evaluates to {}", h.label(x), h.label(got)));
        }
        Ok(())
    }
}

/// `a_i` is the least member of the `i`-th coordinate class of `x`, `e_i` the
/// Boolean element of the `i`-th block.
pub fn decompose<A: Algebra>(hull: &Hull<A>, x: usize) -> Decomposition {
    let coords = hull.top.coords(x);
    let parts = hull
        .top
        .partition
        .blocks()
        .iter()
        .enumerate()
        .map(|(k, &c)| (hull.top.quotients[k].representative(coords[k]), boolean_element(hull, c)))
        .collect();
    Decomposition { parts }
}

#[derive(Clone, Debug)]
pub struct Codensity {
    /// For each `x < 1` of `Ã`, some `y` with `x ≤ ε(y) < 1`; the chosen
    /// `ε(y)` is minimal, ties broken by index. `None` at the top.
    pub witnesses: Vec<Option<usize>>,
    pub holds: bool,
}

pub fn codensity<A: Algebra>(hull: &Hull<A>) -> Codensity {
    let h = hull.algebra();
    let n = hull.source.size();
    let mut holds = true;
    let witnesses = (0..h.size())
        .map(|x| {
            if x == h.top() {
                return None;
            }
            let cands: Vec<usize> = (0..n)
                .filter(|&y| hull.epsilon(y) != h.top() && h.leq(x, hull.epsilon(y)))
                .collect();
            let w = cands.iter().copied().find(|&y| {
                cands
                    .iter()
                    .all(|&z| z == y || !h.leq(hull.epsilon(z), hull.epsilon(y)) || hull.epsilon(z) == hull.epsilon(y))
            });
            holds &= w.is_some();
            w
        })
        .collect();
    Codensity { witnesses, holds }
}

/// `e_C ∨ e_D = e_{C∩D}` for every pair of co-annihilators.
pub fn boolean_join_check<A: Algebra>(hull: &Hull<A>) -> Report {
    let base = hull.base();
    let h = hull.algebra();
    let e = &hull.boolean;
    let k = base.len();
    let mut r = Report::new();
    r.push(
        "e_C join e_D = e_(C meet D)",
        first_failure((0..k).flat_map(|c| (0..k).map(move |d| (c, d))), |&(c, d)| {
            let cd = base.lattice.meet(c, d);
            if h.join(e[c], e[d]) == e[cd] {
                Ok(())
            } else {
                Err(format!("C={}, D={}", base.lattice.label(c), base.lattice.label(d)))
            }
        }),
    );
    r
}

/// Families of co-annihilators up to this many members are scanned in full;
/// larger ones by pairs.
const INTERSECTION_ALL_SUBSETS: usize = 12;

/// `⋂ <e_{C_i}> = <e_{⋂ C_i}>` for nonempty families of co-annihilators.
pub fn intersection_check<A: Algebra>(hull: &Hull<A>, caps: &Caps) -> Result<Report> {
    let base = hull.base();
    let h = hull.algebra();
    let e = &hull.boolean;
    let gen: Vec<ElemSet> = e.iter().map(|&x| principal_filter(h, x).into_members()).collect();
    let k = base.len();
    let check = |family: &[usize]| -> Option<String> {
        let lhs = family.iter().skip(1).fold(gen[family[0]].clone(), |acc, &c| acc.intersection(&gen[c]));
        let meet = family.iter().fold(base.top(), |acc, &c| base.lattice.meet(acc, c));
        (lhs != gen[meet]).then(|| {
            let names: Vec<&str> = family.iter().map(|&c| base.lattice.label(c)).collect();
            names.join(", ")
        })
    };
    let witness = if k <= INTERSECTION_ALL_SUBSETS {
        caps.strategy
            .find_first((1usize << k) - 1, |m| {
                let family: Vec<usize> = (0..k).filter(|&c| (m + 1) >> c & 1 == 1).collect();
                check(&family)
            })
            .map(|(_, w)| w)
    } else {
        (0..k).flat_map(|c| (c..k).map(move |d| [c, d])).find_map(|f| check(&f))
    };
    let mut r = Report::new();
    r.push("intersection of <e_i> = <e> for the intersection of the E_i", witness.map_or(Ok(()), Err));
    Ok(r)
}

/// `{C, C^⊤}` is a partition and `C^⊤⊤ = C` for `C ∉ {{1}, A}`.
pub fn two_block_remark(base: &CoannAlgebra) -> Report {
    let mut r = Report::new();
    let inner: Vec<usize> = (0..base.len()).filter(|&c| c != base.bottom() && c != base.top()).collect();
    r.push(
        "{C, C^T} is a partition and C^TT = C",
        first_failure(inner, |&c| {
            let cc = base.complement[c];
            if base.complement[cc] != c {
                return Err(format!("{}^TT", base.lattice.label(c)));
            }
            Partition::new(base, vec![c, cc])
                .map(|_| ())
                .map_err(|e| format!("{}: {e}", base.lattice.label(c)))
        }),
    );
    r
}

/// Every hull lemma for one algebra.
pub fn hull_lemma_report<A: Algebra>(hull: &Hull<A>, caps: &Caps) -> Result<Report> {
    let h = hull.algebra();
    let src = &hull.source;
    let n = src.size();
    let mut r = Report::new();
    r.extend("construction", hull.report.clone());
    r.extend("", two_block_remark(hull.base()));
    let bh = boolean_center(h);
    let mut star_ok = Ok(());
    for a in 0..n {
        let star = epsilon_star(hull, a);
        let ann = coannihilator(h, &ElemSet::singleton(h.size(), hull.epsilon(a)))?;
        let problem = if ann != principal_filter(h, star) {
            Some("epsilon(a)^T != <epsilon(a)^*>")
        } else if !bh.contains(star) {
            Some("epsilon(a)^* is not Boolean")
        } else if star != boolean_element_direct(hull, hull.base().element[a]) {
            Some("transition and direct computation disagree")
        } else {
            None
        };
        if let Some(p) = problem {
            star_ok = Err(format!("a={}: {p}", src.label(a)));
            break;
        }
    }
    r.push("epsilon(a)^T = <epsilon(a)^*> with epsilon(a)^* in B(hull)", star_ok);
    let stone = classify_stone(h, caps, ClassifyOptions::default())?;
    r.push_flag("hull is co-Stone", stone.co_stone.holds, || stone.co_stone.witness.clone().unwrap_or_default());
    r.push_flag("hull is strongly co-Stone", stone.strongly_co_stone.holds, || {
        stone.strongly_co_stone.witness.clone().unwrap_or_default()
    });
    let cd = codensity(hull);
    r.push_flag("A is co-dense in the hull", cd.holds, || {
        let x = cd.witnesses.iter().enumerate().position(|(x, w)| x != h.top() && w.is_none()).unwrap();
        format!("nothing above {}", h.label(x))
    });
    let mut dec = Ok(());
    for x in 0..h.size() {
        if let Err(w) = decompose(hull, x).check(hull, x) {
            dec = Err(w);
            break;
        }
    }
    r.push("every hull element is a meet of epsilon(a_i) join e_i", dec);
    r.extend("", boolean_join_check(hull));
    r.extend("", intersection_check(hull, caps)?);
    Ok(r)
}

/// `L(Ã) ≅ (L(A))~`: both sides built independently, the isomorphism assembled
/// blockwise from `x ↦ (λ(a_C)/μ(C)^⊤)_C` and cross-checked by search.
pub fn hull_preservation_check<A: Algebra>(alg: &A, caps: &Caps) -> Result<Report> {
    let hull = build_hull(alg, caps)?;
    let l_of_hull = reticulate(hull.algebra())?;
    let ret = reticulate(alg)?;
    let lhull: Hull<Lattice> = build_hull(&ret.lattice, caps)?;
    let mu = coann_iso(&ret, caps)?;
    let mut r = Report::new();
    r.extend("mu on CoAnn", mu.report.clone());
    r.push_flag(
        "both hulls use the same CoAnn(A)",
        mu.source.carrier == hull.base().carrier && mu.target.carrier == lhull.base().carrier,
        || "carrier mismatch".into(),
    );
    let blocks = hull.top.partition.blocks();
    let lblocks = lhull.top.partition.blocks();
    let position: Vec<Option<usize>> = blocks.iter().map(|&c| lblocks.iter().position(|&d| d == mu.map[c])).collect();
    let nu_ok = position.iter().all(Option::is_some) && blocks.len() == lblocks.len();
    r.push_flag("nu maps the finest partition onto the finest partition", nu_ok, || {
        format!("{} vs {}", hull.top.partition.display(hull.base()), lhull.top.partition.display(lhull.base()))
    });
    if !nu_ok {
        return Ok(r);
    }
    let h = hull.algebra();
    let target = lhull.algebra();
    let mut phi = vec![usize::MAX; l_of_hull.lattice.size()];
    let mut consistent = Ok(());
    for x in 0..h.size() {
        let cx = hull.top.coords(x);
        let mut cy = vec![0; lblocks.len()];
        for (k, pos) in position.iter().enumerate() {
            let pos = pos.expect("checked");
            let a = hull.top.quotients[k].representative(cx[k]);
            cy[pos] = lhull.top.quotients[pos].class_of(ret.lambda(a));
        }
        let y = lhull.top.index(&cy);
        let slot = &mut phi[l_of_hull.lambda(x)];
        if *slot == usize::MAX {
            *slot = y;
        } else if *slot != y && consistent.is_ok() {
            consistent = Err(format!("two values at {}", h.label(x)));
        }
    }
    r.push("phi is well defined on L(hull)", consistent);
    let bijective = {
        let mut seen = vec![false; target.size()];
        phi.len() == target.size() && phi.iter().all(|&y| y < seen.len() && !std::mem::replace(&mut seen[y], true))
    };
    r.push_flag("phi is bijective", bijective, || format!("{phi:?}"));
    if bijective {
        r.push("phi is a bounded-lattice morphism", check_morphism(&l_of_hull.lattice, target, &phi));
    }
    if target.size() <= caps.iso_search {
        let found = find_isomorphism_with(&l_of_hull.lattice, target, caps.iso_search)?;
        r.push_flag("L(hull) and the hull of L(A) are isomorphic (search)", found.is_some(), || {
            "no isomorphism".into()
        });
    }
    r.extend("lattice hull", lhull.report.clone());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::chain;
    use crate::corpus;

    fn lrex0_5() -> (Hull<crate::ResiduatedLattice>, Caps) {
        let caps = Caps::default();
        let a = corpus::get("lrex0_5").unwrap();
        (build_hull(&a, &caps).unwrap(), caps)
    }

    fn name(hull: &Hull<crate::ResiduatedLattice>, x: usize) -> String {
        hull.algebra().label(x).to_string()
    }

    #[test]
    fn epsilon_stars_of_lrex0_5() {
        let (hull, _) = lrex0_5();
        let a = &hull.source;
        let star = |l: &str| name(&hull, epsilon_star(&hull, a.lattice().index_of(l).unwrap()));
        assert_eq!(star("b"), "(1,0)");
        assert_eq!(star("a"), "(1,1)");
        assert_eq!(star("1"), "(0,0)");
        let b = a.lattice().index_of("b").unwrap();
        let h = hull.algebra();
        let ann = coannihilator(h, &ElemSet::singleton(9, hull.epsilon(b))).unwrap();
        assert_eq!(ann.display_with(h.labels()), "{(1,0),(1,a),(1,1)}");
    }

    #[test]
    fn decomposition_of_x_a0() {
        let (hull, _) = lrex0_5();
        let h = hull.algebra();
        let x = (0..9).find(|&x| h.label(x) == "(a,0)").unwrap();
        let d = decompose(&hull, x);
        let named: Vec<(String, String)> = d
            .parts
            .iter()
            .map(|&(a, e)| (hull.source.label(a).to_string(), name(&hull, e)))
            .collect();
        assert_eq!(named, [("a".into(), "(0,1)".into()), ("0".into(), "(1,0)".into())]);
        assert_eq!(d.check(&hull, x), Ok(()));
    }

    #[test]
    fn codensity_witnesses() {
        let (hull, _) = lrex0_5();
        let cd = codensity(&hull);
        assert!(cd.holds);
        let h = hull.algebra();
        let x = (0..9).find(|&x| h.label(x) == "(1,a)").unwrap();
        assert_eq!(hull.source.label(cd.witnesses[x].unwrap()), "c");
        for a in 0..4 {
            assert_eq!(cd.witnesses[hull.epsilon(a)], Some(a));
        }
    }

    #[test]
    fn lemma_reports_pass() {
        let caps = Caps::default();
        for key in corpus::EXAMPLE_KEYS {
            let a = corpus::get(key).unwrap();
            let hull = build_hull(&a, &caps).unwrap();
            let r = hull_lemma_report(&hull, &caps).unwrap();
            assert!(r.all_passed(), "{key}:\n{r}");
        }
    }

    #[test]
    fn preservation() {
        let caps = Caps::default();
        for alg in [corpus::get("lrex0").unwrap(), corpus::get("lrex0_5").unwrap(), chain(3).unwrap()] {
            let r = hull_preservation_check(&alg, &caps).unwrap();
            assert!(r.all_passed(), "{r}");
        }
    }
}
