//! Boolean centers, co-annihilators and the Boolean algebra `CoAnn(A)`.

use crate::algebra::{Algebra, Lattice, Table};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::filters::{check_filter, Filter};
use crate::report::{first_failure, Report};
use crate::set::ElemSet;

/// The complemented elements of an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanCenter {
    pub members: ElemSet,
    /// `complement[e]` for members, `None` elsewhere.
    pub complement: Vec<Option<usize>>,
    /// Idempotence, the `¬e → a = e ∨ a` identity and closure.
    pub report: Report,
}

impl BooleanCenter {
    pub fn contains(&self, e: usize) -> bool {
        self.members.contains(e)
    }
}

/// `a ∨ ¬a = 1` for residuated lattices, complement search for lattices.
pub fn boolean_center<A: Algebra>(alg: &A) -> BooleanCenter {
    let n = alg.size();
    let complement: Vec<Option<usize>> = (0..n).map(|a| alg.complement(a)).collect();
    let members = ElemSet::from_iter(n, (0..n).filter(|&a| complement[a].is_some()));
    let mut report = Report::new();
    let l = |a: usize| alg.label(a).to_string();
    report.push(
        "e*e = e",
        first_failure(members.iter(), |&e| if alg.filter_op(e, e) == e { Ok(()) } else { Err(l(e)) }),
    );
    report.push(
        "complement is an involution",
        first_failure(members.iter(), |&e| {
            let c = complement[e].unwrap();
            if complement[c] == Some(e) && alg.meet(e, c) == alg.bottom() && alg.join(e, c) == alg.top() {
                Ok(())
            } else {
                Err(l(e))
            }
        }),
    );
    if alg.residuum(0, 0).is_some() {
        report.push(
            "not e -> a = e join a",
            first_failure(members.iter().flat_map(|e| (0..n).map(move |a| (e, a))), |&(e, a)| {
                let ne = alg.negation(e).unwrap();
                if alg.residuum(ne, a) == Some(alg.join(e, a)) {
                    Ok(())
                } else {
                    Err(format!("({},{})", l(e), l(a)))
                }
            }),
        );
    }
    report.push(
        "closed under meet, join and implication",
        first_failure(members.iter().flat_map(|e| members.iter().map(move |f| (e, f))), |&(e, f)| {
            let mut results = vec![alg.meet(e, f), alg.join(e, f)];
            results.extend(alg.residuum(e, f));
            if results.iter().all(|&r| members.contains(r)) {
                Ok(())
            } else {
                Err(format!("({},{})", l(e), l(f)))
            }
        }),
    );
    BooleanCenter { members, complement, report }
}

/// `X^⊤ = {a : a ∨ x = 1 for all x ∈ X}`.
pub fn coannihilator<A: Algebra>(alg: &A, x: &ElemSet) -> Result<Filter> {
    if x.is_empty() {
        return Err(Error::EmptySet);
    }
    if x.universe() != alg.size() {
        return Err(Error::HostMismatch(x.universe(), alg.size()));
    }
    let n = alg.size();
    let set = ElemSet::from_iter(n, (0..n).filter(|&a| x.iter().all(|y| alg.join(a, y) == alg.top())));
    Filter::new(alg, set)
}

/// `x^⊤` for a single element.
pub fn element_coannihilator<A: Algebra>(alg: &A, x: usize) -> Filter {
    coannihilator(alg, &ElemSet::singleton(alg.size(), x)).expect("co-annihilators are filters")
}

/// All co-annihilators of an algebra as a Boolean algebra.
#[derive(Clone, Debug)]
pub struct CoannAlgebra {
    /// Sorted canonically: `{1}` first, the whole carrier last.
    pub carrier: Vec<Filter>,
    /// `∩` as meet and `F ∨^⊤ G = (F^⊤ ∩ G^⊤)^⊤` as join.
    pub lattice: Lattice,
    /// `complement[i]` is the index of `carrier[i]^⊤`.
    pub complement: Vec<usize>,
    /// `element[x]` is the index of `x^⊤`.
    pub element: Vec<usize>,
    /// Boolean-algebra laws and `C^⊤⊤ = C`.
    pub report: Report,
}

impl CoannAlgebra {
    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn index_of(&self, f: &Filter) -> Option<usize> {
        self.carrier.binary_search(f).ok()
    }

    pub fn index_of_set(&self, s: &ElemSet) -> Option<usize> {
        self.carrier.iter().position(|f| f.members() == s)
    }

    pub fn bottom(&self) -> usize {
        self.lattice.bottom()
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    /// Atoms of the Boolean algebra, in carrier order.
    pub fn atoms(&self) -> Vec<usize> {
        let mut a = self.lattice.atoms();
        a.sort();
        a
    }
}

/// `CoAnn(A)`: the closure of `{x^⊤ : x ∈ A}` under intersection, which is
/// exactly `{X^⊤ : X ≠ ∅}` since `X^⊤ = ⋂_{x∈X} x^⊤`.
pub fn coann_algebra<A: Algebra>(alg: &A, caps: &Caps) -> Result<CoannAlgebra> {
    let n = alg.size();
    if n > caps.product {
        return Err(Error::CapExceeded { what: "co-annihilator algebra".into(), size: n, cap: caps.product });
    }
    let singles: Vec<Filter> = (0..n).map(|x| element_coannihilator(alg, x)).collect();
    let mut carrier: Vec<Filter> = singles.clone();
    carrier.sort();
    carrier.dedup();
    loop {
        let mut grown = carrier.clone();
        for f in &carrier {
            for g in &carrier {
                let h = crate::filters::filter_meet(f, g)?;
                if let Err(pos) = grown.binary_search(&h) {
                    grown.insert(pos, h);
                }
            }
        }
        if grown.len() == carrier.len() {
            break;
        }
        carrier = grown;
    }
    let k = carrier.len();
    let index = |s: &ElemSet| -> Result<usize> {
        carrier
            .iter()
            .position(|f| f.members() == s)
            .ok_or_else(|| Error::NotAFilter(format!("{s:?} is not a co-annihilator")))
    };
    let perp: Vec<Filter> = carrier
        .iter()
        .map(|f| coannihilator(alg, f.members()))
        .collect::<Result<_>>()?;
    let complement: Vec<usize> = perp.iter().map(|f| index(f.members())).collect::<Result<_>>()?;
    let mut meet = vec![vec![0; k]; k];
    let mut join = vec![vec![0; k]; k];
    for i in 0..k {
        for j in 0..k {
            meet[i][j] = index(&carrier[i].members().intersection(carrier[j].members()))?;
            let both = perp[i].members().intersection(perp[j].members());
            join[i][j] = index(coannihilator(alg, &both)?.members())?;
        }
    }
    let labels = carrier.iter().map(|f| f.display_with(alg.labels())).collect();
    let lattice = Lattice::new(labels, Table::from_rows(&join)?, Table::from_rows(&meet)?)?;
    let element = singles.iter().map(|f| index(f.members())).collect::<Result<_>>()?;
    let mut report = Report::new();
    report.push(
        "members are filters",
        first_failure(carrier.iter(), |f| check_filter(alg, f.members())),
    );
    report.push_flag("distributive", lattice.is_distributive(), || {
        lattice.require_distributive().err().map(|e| e.to_string()).unwrap_or_default()
    });
    report.push(
        "^T is a complement",
        first_failure(0..k, |&i| {
            let c = complement[i];
            if lattice.meet(i, c) == lattice.bottom() && lattice.join(i, c) == lattice.top() {
                Ok(())
            } else {
                Err(lattice.label(i).to_string())
            }
        }),
    );
    report.push(
        "C^TT = C",
        first_failure(0..k, |&i| if complement[complement[i]] == i { Ok(()) } else { Err(lattice.label(i).to_string()) }),
    );
    report.push_flag(
        "bottom is {1} and top is the whole carrier",
        carrier[lattice.bottom()] == Filter::unit(alg) && carrier[lattice.top()] == Filter::whole(alg),
        || format!("bottom {}, top {}", lattice.label(lattice.bottom()), lattice.label(lattice.top())),
    );
    Ok(CoannAlgebra { carrier, lattice, complement, element, report })
}
