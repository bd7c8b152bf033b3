//! Co-Stone, strongly co-Stone and m-co-Stone classification.
//!
//! At finite scale every cardinal bound `m` exceeds `|A|`, so the m-conditions
//! quantify over all nonempty subsets `X`. Since `X^⊤ = ⋂_{x∈X} x^⊤`, the
//! values `X^⊤` are exactly the members of `CoAnn(A)`, and the conditions are
//! checked over that carrier. The optional exhaustive mode scans every subset
//! directly and compares.

use serde::Serialize;

use crate::algebra::{check_morphism, Algebra, Kind};
use crate::coann::{boolean_center, coann_algebra, coannihilator, element_coannihilator, BooleanCenter, CoannAlgebra};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::filters::{filter_join, principal_filter, Filter};
use crate::report::Report;
use crate::reticulation::{reticulate, Reticulation};
use crate::set::ElemSet;

/// A flag with the first counterexample when it is false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Verdict {
    pub fn pass() -> Verdict {
        Verdict { holds: true, witness: None }
    }

    pub fn fail(witness: impl Into<String>) -> Verdict {
        Verdict { holds: false, witness: Some(witness.into()) }
    }
}

/// The five conditions of the m-co-Stone characterisation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MConditions {
    /// (I) every `X^⊤` is `<e>` with `e ∈ B(A)`.
    pub i: Verdict,
    /// (II) co-Stone and `B(A)` complete; finite Boolean algebras are complete,
    /// so this is the co-Stone flag.
    pub ii: Verdict,
    /// (III) `{a^⊤⊤}` is a Boolean sublattice of the filter lattice.
    pub iii: Verdict,
    /// (IV) `(a ∨ b)^⊤ = a^⊤ ∨ b^⊤` and every `X^⊤⊤` is some `x^⊤`.
    pub iv: Verdict,
    /// (V) `X^⊤ ∨ X^⊤⊤ = A`.
    pub v: Verdict,
    /// Subset-by-subset recomputation of (I), (IV) and (V), when requested
    /// and the carrier is within `caps.exhaustive_subsets`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exhaustive: Option<Verdict>,
    pub note: &'static str,
}

impl MConditions {
    pub fn flags(&self) -> [bool; 5] {
        [self.i.holds, self.ii.holds, self.iii.holds, self.iv.holds, self.v.holds]
    }

    pub fn verdicts(&self) -> [(&'static str, &Verdict); 5] {
        [("I", &self.i), ("II", &self.ii), ("III", &self.iii), ("IV", &self.iv), ("V", &self.v)]
    }

    /// The characterisation says the five flags coincide.
    pub fn agree(&self) -> bool {
        let f = self.flags();
        f.iter().all(|&x| x == f[0])
    }
}

const II_NOTE: &str = "(II) reduces to co-Stone: every finite Boolean algebra is complete";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StoneReport {
    pub co_stone: Verdict,
    /// `x ↦ e` with `x^⊤ = <e>`, `e ∈ B(A)` (least such `e`), per element.
    pub co_stone_witnesses: Vec<Option<usize>>,
    pub strongly_co_stone: Verdict,
    /// The same per member of `CoAnn(A)`.
    pub strongly_witnesses: Vec<Option<usize>>,
    /// `¬a ∨ ¬¬a = 1` (residuated) or `a* ∨ a** = 1` (lattices).
    pub stone_identity: Verdict,
    /// `l* ∨ l** = 1` on the reticulation, when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reticulation_stone_identity: Option<Verdict>,
    pub m_conditions: MConditions,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub exhaustive_subsets: bool,
    pub reticulation_side: bool,
}

fn show<A: Algebra>(alg: &A, s: &ElemSet) -> String {
    s.display_with(alg.labels())
}

/// Least `e ∈ B(A)` with `<e> = set`.
fn boolean_generator<A: Algebra>(alg: &A, bc: &BooleanCenter, set: &ElemSet) -> Option<usize> {
    bc.members.iter().find(|&e| principal_filter(alg, e).members() == set)
}

/// The rival Stone identity `n(a) ∨ n(n(a)) = 1`, with `n` from
/// [`Algebra::negation`].
pub fn stone_identity<A: Algebra>(alg: &A) -> Verdict {
    for a in 0..alg.size() {
        let Some(na) = alg.negation(a) else {
            return Verdict::fail(format!("{} has no pseudocomplement", alg.label(a)));
        };
        let Some(nna) = alg.negation(na) else {
            return Verdict::fail(format!("{} has no pseudocomplement", alg.label(na)));
        };
        let v = alg.join(na, nna);
        if v != alg.top() {
            let (n1, n2) = match A::KIND {
                Kind::Residuated => (format!("¬{}", alg.label(a)), format!("¬¬{}", alg.label(a))),
                Kind::Lattice => (format!("{}*", alg.label(a)), format!("{}**", alg.label(a))),
            };
            return Verdict::fail(format!("{n1}∨{n2}={}", alg.label(v)));
        }
    }
    Verdict::pass()
}

pub fn classify_stone<A: Algebra>(alg: &A, caps: &Caps, opts: ClassifyOptions) -> Result<StoneReport> {
    let bc = boolean_center(alg);
    let coann = coann_algebra(alg, caps)?;
    let n = alg.size();
    let co_stone_witnesses: Vec<Option<usize>> = (0..n)
        .map(|x| boolean_generator(alg, &bc, coann.carrier[coann.element[x]].members()))
        .collect();
    let co_stone = match co_stone_witnesses.iter().position(Option::is_none) {
        None => Verdict::pass(),
        Some(x) => Verdict::fail(format!(
            "{}^⊤={}",
            alg.label(x),
            show(alg, coann.carrier[coann.element[x]].members())
        )),
    };
    let strongly_witnesses: Vec<Option<usize>> = coann
        .carrier
        .iter()
        .map(|c| boolean_generator(alg, &bc, c.members()))
        .collect();
    let strongly_co_stone = match strongly_witnesses.iter().position(Option::is_none) {
        None => Verdict::pass(),
        Some(i) => Verdict::fail(format!("X^⊤={} is not generated by a Boolean element", show(alg, coann.carrier[i].members()))),
    };
    let reticulation_stone_identity = if opts.reticulation_side {
        Some(stone_identity(&reticulate(alg)?.lattice))
    } else {
        None
    };
    let m_conditions = m_conditions_with(alg, &bc, &coann, &co_stone, caps, opts.exhaustive_subsets)?;
    Ok(StoneReport {
        co_stone,
        co_stone_witnesses,
        strongly_co_stone,
        strongly_witnesses,
        stone_identity: stone_identity(alg),
        reticulation_stone_identity,
        m_conditions,
    })
}

/// The five m-conditions, each evaluated from its own definition.
pub fn m_condition_report<A: Algebra>(alg: &A, caps: &Caps, exhaustive: bool) -> Result<MConditions> {
    Ok(classify_stone(alg, caps, ClassifyOptions { exhaustive_subsets: exhaustive, reticulation_side: false })?
        .m_conditions)
}

fn m_conditions_with<A: Algebra>(
    alg: &A,
    bc: &BooleanCenter,
    coann: &CoannAlgebra,
    co_stone: &Verdict,
    caps: &Caps,
    exhaustive: bool,
) -> Result<MConditions> {
    let n = alg.size();
    let whole = Filter::whole(alg);
    let perp = |f: &Filter| coannihilator(alg, f.members());
    // (I): each C has a least element, and it is complemented.
    let mut i = Verdict::pass();
    for c in &coann.carrier {
        let least = c.members().iter().find(|&e| c.members().iter().all(|x| alg.leq(e, x)));
        let ok = match least {
            Some(e) => bc.contains(e) && principal_filter(alg, e) == *c,
            None => false,
        };
        if !ok {
            i = Verdict::fail(format!("X^⊤={} is not <e> for e in B(A)", show(alg, c.members())));
            break;
        }
    }
    let ii = co_stone.clone();
    // (III)
    let mut tt: Vec<Filter> = (0..n)
        .map(|a| perp(&element_coannihilator(alg, a)))
        .collect::<Result<_>>()?;
    tt.sort();
    tt.dedup();
    let mut iii = Verdict::pass();
    let unit = Filter::unit(alg);
    if !tt.contains(&unit) || !tt.contains(&whole) {
        iii = Verdict::fail("bounds {1} and A are not both of the form a^⊤⊤");
    }
    'pairs: for f in &tt {
        for g in &tt {
            let m = crate::filters::filter_meet(f, g)?;
            let j = filter_join(alg, f, g)?;
            if !tt.contains(&m) {
                iii = Verdict::fail(format!("{} ∩ {} = {} is not of the form a^⊤⊤", show(alg, f.members()), show(alg, g.members()), show(alg, m.members())));
                break 'pairs;
            }
            if !tt.contains(&j) {
                iii = Verdict::fail(format!("{} ∨ {} = {} is not of the form a^⊤⊤", show(alg, f.members()), show(alg, g.members()), show(alg, j.members())));
                break 'pairs;
            }
        }
        let complemented = tt.iter().any(|g| {
            crate::filters::filter_meet(f, g).map(|m| m == unit).unwrap_or(false)
                && filter_join(alg, f, g).map(|j| j == whole).unwrap_or(false)
        });
        if !complemented {
            iii = Verdict::fail(format!("{} has no complement among the a^⊤⊤", show(alg, f.members())));
            break;
        }
    }
    // (IV)
    let single: Vec<Filter> = (0..n).map(|x| element_coannihilator(alg, x)).collect();
    let mut iv = Verdict::pass();
    'iv: for a in 0..n {
        for b in 0..n {
            let lhs = &single[alg.join(a, b)];
            let rhs = filter_join(alg, &single[a], &single[b])?;
            if *lhs != rhs {
                iv = Verdict::fail(format!(
                    "({}∨{})^⊤={} but {}^⊤∨{}^⊤={}",
                    alg.label(a),
                    alg.label(b),
                    show(alg, lhs.members()),
                    alg.label(a),
                    alg.label(b),
                    show(alg, rhs.members())
                ));
                break 'iv;
            }
        }
    }
    let mut iv_subsets = Verdict::pass();
    for c in &coann.carrier {
        let cc = perp(c)?;
        if !single.contains(&cc) {
            iv_subsets = Verdict::fail(format!("X^⊤⊤={} is no x^⊤", show(alg, cc.members())));
            break;
        }
    }
    let iv_subsets_holds = iv_subsets.holds;
    if iv.holds {
        iv = iv_subsets;
    }
    // (V)
    let mut v = Verdict::pass();
    for c in &coann.carrier {
        let j = filter_join(alg, c, &perp(c)?)?;
        if j != whole {
            v = Verdict::fail(format!(
                "X^⊤={}: X^⊤ ∨ X^⊤⊤={}",
                show(alg, c.members()),
                show(alg, j.members())
            ));
            break;
        }
    }
    let exhaustive = if exhaustive && alg.size() <= caps.exhaustive_subsets {
        Some(exhaustive_cross_check(alg, bc, &single, caps, [i.holds, iv_subsets_holds, v.holds])?)
    } else {
        None
    };
    Ok(MConditions { i, ii, iii, iv, v, exhaustive, note: II_NOTE })
}

/// Recomputes (I), the subset half of (IV) and (V) over every nonempty
/// subset and compares with the values read off `CoAnn(A)`.
fn exhaustive_cross_check<A: Algebra>(
    alg: &A,
    bc: &BooleanCenter,
    single: &[Filter],
    caps: &Caps,
    canonical: [bool; 3],
) -> Result<Verdict> {
    let n = alg.size();
    if n > caps.exhaustive_subsets {
        return Err(Error::CapExceeded { what: "exhaustive subset scan".into(), size: n, cap: caps.exhaustive_subsets });
    }
    let whole = Filter::whole(alg);
    let failures = caps.strategy.filter_map_u64((1u64 << n) - 1, |m| {
        let x = ElemSet::from_mask(n, m + 1);
        let xt = coannihilator(alg, &x).ok()?;
        let xtt = coannihilator(alg, xt.members()).ok()?;
        let joined = filter_join(alg, &xt, &xtt).ok()?;
        let ok = [
            boolean_generator(alg, bc, xt.members()).is_some(),
            single.contains(&xtt),
            joined == whole,
        ];
        (ok != [true; 3]).then_some(ok)
    });
    let scanned = [0, 1, 2].map(|k| failures.iter().all(|ok| ok[k]));
    let mismatches: Vec<&str> = ["I", "IV", "V"]
        .into_iter()
        .zip(scanned.iter().zip(canonical))
        .filter(|(_, (s, c))| **s != *c)
        .map(|(name, _)| name)
        .collect();
    Ok(if mismatches.is_empty() {
        Verdict::pass()
    } else {
        Verdict::fail(format!("subset scan disagrees on {}", mismatches.join(", ")))
    })
}

/// `μ(F) = λ(F)` restricted to co-annihilators.
#[derive(Clone, Debug)]
pub struct CoannIso {
    pub source: CoannAlgebra,
    pub target: CoannAlgebra,
    pub map: Vec<usize>,
    pub report: Report,
}

pub fn coann_iso<A: Algebra>(ret: &Reticulation<A>, caps: &Caps) -> Result<CoannIso> {
    let alg = &ret.source;
    let lat = &ret.lattice;
    let source = coann_algebra(alg, caps)?;
    let target = coann_algebra(lat, caps)?;
    let mut report = Report::new();
    let map: Vec<usize> = source
        .carrier
        .iter()
        .map(|f| target.index_of_set(&ret.image(f.members())).unwrap_or(usize::MAX))
        .collect();
    let lands = map.iter().all(|&y| y != usize::MAX);
    report.push_flag("mu maps co-annihilators to co-annihilators", lands, || {
        let i = map.iter().position(|&y| y == usize::MAX).unwrap();
        source.carrier[i].display_with(alg.labels())
    });
    if lands {
        let mut seen = vec![false; target.len()];
        let injective = map.iter().all(|&y| !std::mem::replace(&mut seen[y], true));
        report.push_flag("mu is bijective", injective && seen.iter().all(|&s| s), || format!("{map:?}"));
        report.push("mu preserves meet and join", check_morphism(&source.lattice, &target.lattice, &map));
        report.push_flag(
            "mu(F^T) = mu(F)^T",
            (0..source.len()).all(|i| map[source.complement[i]] == target.complement[map[i]]),
            || "complement not preserved".into(),
        );
        if injective {
            let mut inv = vec![usize::MAX; target.len()];
            for (i, &y) in map.iter().enumerate() {
                inv[y] = i;
            }
            report.push_flag(
                "mu^-1(G^T) = mu^-1(G)^T",
                (0..target.len()).all(|g| inv[target.complement[g]] == source.complement[inv[g]]),
                || "inverse does not commute with ^T".into(),
            );
        }
    }
    Ok(CoannIso { source, target, map, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{boolean, chain};
    use crate::corpus;

    fn opts() -> ClassifyOptions {
        ClassifyOptions { exhaustive_subsets: true, reticulation_side: true }
    }

    #[test]
    fn lrex0_is_co_stone_without_the_stone_identity() {
        let a = corpus::get("lrex0").unwrap();
        let r = classify_stone(&a, &Caps::default(), opts()).unwrap();
        assert!(r.co_stone.holds);
        assert!(r.strongly_co_stone.holds);
        assert_eq!(r.stone_identity, Verdict::fail("¬a∨¬¬a=c"));
        assert_eq!(r.m_conditions.flags(), [true; 5]);
        assert_eq!(r.m_conditions.exhaustive, Some(Verdict::pass()));
    }

    #[test]
    fn lrex8_satisfies_the_stone_identity_without_being_co_stone() {
        let a = corpus::get("lrex8").unwrap();
        let r = classify_stone(&a, &Caps::default(), ClassifyOptions::default()).unwrap();
        assert_eq!(r.co_stone, Verdict::fail("c^⊤={d,1}"));
        assert!(r.stone_identity.holds);
        assert!(r.m_conditions.agree());
    }

    #[test]
    fn lrex0_5_fails_every_condition() {
        let a = corpus::get("lrex0_5").unwrap();
        let r = classify_stone(&a, &Caps::default(), opts()).unwrap();
        // b^T = <c> but c is not complemented.
        assert_eq!(r.co_stone, Verdict::fail("b^⊤={c,1}"));
        assert_eq!(r.m_conditions.flags(), [false; 5]);
        assert_eq!(
            r.m_conditions.iv.witness.as_deref(),
            Some("(b∨c)^⊤={0,a,b,c,1} but b^⊤∨c^⊤={a,b,c,1}")
        );
        assert_eq!(r.m_conditions.exhaustive, Some(Verdict::pass()));
    }

    #[test]
    fn lrex3_rival_identity_does_not_transfer() {
        let a = corpus::get("lrex3").unwrap();
        let r = classify_stone(&a, &Caps::default(), opts()).unwrap();
        assert_eq!(r.stone_identity, Verdict::fail("¬b∨¬¬b=c"));
        assert_eq!(r.reticulation_stone_identity, Some(Verdict::pass()));
    }

    #[test]
    fn chains_and_trivial() {
        for n in 1..=8 {
            let r = classify_stone(&chain(n).unwrap(), &Caps::default(), opts()).unwrap();
            assert!(r.strongly_co_stone.holds, "chain {n}");
            assert_eq!(r.m_conditions.flags(), [true; 5]);
        }
        let r = classify_stone(&boolean(8).unwrap(), &Caps::default(), opts()).unwrap();
        assert!(r.strongly_co_stone.holds && r.stone_identity.holds);
    }

    #[test]
    fn coann_isos() {
        for (key, size) in [("lrex0_5", 4), ("lrex0", 2), ("chain:1", 1)] {
            let a = corpus::get(key).unwrap();
            let iso = coann_iso(&reticulate(&a).unwrap(), &Caps::default()).unwrap();
            assert!(iso.report.all_passed(), "{key}: {}", iso.report);
            assert_eq!(iso.source.len(), size);
            assert_eq!(iso.target.len(), size);
        }
    }
}
