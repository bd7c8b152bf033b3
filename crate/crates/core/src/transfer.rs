//! Properties carried across `λ : A → L(A)`.

use crate::algebra::{power_sequence, Algebra, Kind};
use crate::coann::{boolean_center, coann_algebra, coannihilator};
use crate::config::Caps;
use crate::error::Result;
use crate::report::{first_failure, Report};
use crate::reticulation::{mu_iso, spectrum_bijection, Reticulation};
use crate::set::ElemSet;
use crate::stone::{classify_stone, ClassifyOptions, StoneReport};

/// Carriers up to this size get `λ(X^⊤) = λ(X)^⊤` on every nonempty subset.
pub const COMMUTE_ALL_SUBSETS: usize = 12;

/// `λ(a) = 1 ⟺ a = 1` and `λ(a) = 0 ⟺ aⁿ = 0` for some `n`.
pub fn lambda_extremes<A: Algebra>(ret: &Reticulation<A>) -> Report {
    let alg = &ret.source;
    let lat = &ret.lattice;
    let mut r = Report::new();
    r.push(
        "lambda(a) = 1 iff a = 1",
        first_failure(0..alg.size(), |&a| {
            if (ret.lambda[a] == lat.top()) == (a == alg.top()) {
                Ok(())
            } else {
                Err(alg.label(a).to_string())
            }
        }),
    );
    r.push(
        "lambda(a) = 0 iff a^n = 0 for some n",
        first_failure(0..alg.size(), |&a| {
            let nil = power_sequence(alg, a).contains(&alg.bottom());
            if (ret.lambda[a] == lat.bottom()) == nil {
                Ok(())
            } else {
                Err(alg.label(a).to_string())
            }
        }),
    );
    r
}

/// `a ∈ B(A) ⟹ λ(a) ∈ B(L(A))` and `λ(a) ∈ B(L(A)) ⟺ aⁿ ∈ B(A)` for some `n`.
pub fn lambda_boolean<A: Algebra>(ret: &Reticulation<A>) -> Report {
    let alg = &ret.source;
    let ba = boolean_center(alg);
    let bl = boolean_center(&ret.lattice);
    let mut r = Report::new();
    r.push(
        "a in B(A) implies lambda(a) in B(L(A))",
        first_failure(ba.members.iter(), |&a| {
            if bl.contains(ret.lambda[a]) {
                Ok(())
            } else {
                Err(alg.label(a).to_string())
            }
        }),
    );
    r.push(
        "lambda(a) in B(L(A)) iff a^n in B(A) for some n",
        first_failure(0..alg.size(), |&a| {
            let some_power = power_sequence(alg, a).iter().any(|&p| ba.contains(p));
            if bl.contains(ret.lambda[a]) == some_power {
                Ok(())
            } else {
                Err(alg.label(a).to_string())
            }
        }),
    );
    r
}

/// `λ|B(A)` is a Boolean isomorphism onto `B(L(A))`.
pub fn boolean_center_iso<A: Algebra>(ret: &Reticulation<A>) -> Report {
    let alg = &ret.source;
    let lat = &ret.lattice;
    let ba = boolean_center(alg);
    let bl = boolean_center(lat);
    let mut r = Report::new();
    let members: Vec<usize> = ba.members.to_vec();
    let image = ElemSet::from_iter(lat.size(), members.iter().map(|&e| ret.lambda[e]));
    r.push_flag("lambda is injective on B(A)", image.len() == members.len(), || {
        format!("|B(A)|={} but |lambda(B(A))|={}", members.len(), image.len())
    });
    r.push_flag("lambda(B(A)) = B(L(A))", image == bl.members, || {
        format!(
            "{} vs {}",
            image.display_with(lat.labels()),
            bl.members.display_with(lat.labels())
        )
    });
    let pairs = members.iter().flat_map(|&a| members.iter().map(move |&b| (a, b)));
    r.push(
        "lambda preserves join and meet on B(A)",
        first_failure(pairs, |&(a, b)| {
            let (la, lb) = (ret.lambda[a], ret.lambda[b]);
            if ret.lambda[alg.join(a, b)] == lat.join(la, lb) && ret.lambda[alg.meet(a, b)] == lat.meet(la, lb) {
                Ok(())
            } else {
                Err(format!("({},{})", alg.label(a), alg.label(b)))
            }
        }),
    );
    r.push(
        "lambda preserves complements on B(A)",
        first_failure(members.iter().copied(), |&e| {
            let ok = match ba.complement[e] {
                Some(c) => bl.complement[ret.lambda[e]] == Some(ret.lambda[c]),
                None => false,
            };
            if ok {
                Ok(())
            } else {
                Err(alg.label(e).to_string())
            }
        }),
    );
    r.push_flag(
        "lambda preserves 0 and 1",
        ret.lambda[alg.bottom()] == lat.bottom() && ret.lambda[alg.top()] == lat.top(),
        || "bounds".into(),
    );
    r
}

/// `λ(X^⊤) = λ(X)^⊤`. Every nonempty `X` up to [`COMMUTE_ALL_SUBSETS`]
/// elements; above that the singletons and the co-annihilators themselves.
pub fn commutes_with_coannihilator<A: Algebra>(ret: &Reticulation<A>, caps: &Caps) -> Result<Report> {
    let alg = &ret.source;
    let lat = &ret.lattice;
    let n = alg.size();
    let check = |x: &ElemSet| -> Option<String> {
        let lhs = ret.image(coannihilator(alg, x).ok()?.members());
        let rhs = coannihilator(lat, &ret.image(x)).ok()?;
        (&lhs != rhs.members()).then(|| {
            format!(
                "X={}: lambda(X^T)={} but lambda(X)^T={}",
                x.display_with(alg.labels()),
                lhs.display_with(lat.labels()),
                rhs.display_with(lat.labels())
            )
        })
    };
    let witness = if n <= COMMUTE_ALL_SUBSETS {
        caps.strategy
            .find_first((1usize << n) - 1, |m| check(&ElemSet::from_mask(n, m as u64 + 1)))
            .map(|(_, w)| w)
    } else {
        let coann = coann_algebra(alg, caps)?;
        (0..n)
            .map(|x| ElemSet::singleton(n, x))
            .chain(coann.carrier.iter().map(|c| c.members().clone()))
            .find_map(|x| check(&x))
    };
    let mut r = Report::new();
    r.push("lambda(X^T) = lambda(X)^T", witness.map_or(Ok(()), Err));
    Ok(r)
}

fn compare_flags(r: &mut Report, name: &str, a: bool, l: bool) {
    r.push_flag(name, a == l, || format!("A: {a}, L(A): {l}"));
}

/// Classification of `A` against that of `L(A)`, flag by flag.
pub fn classification_transfer(a: &StoneReport, l: &StoneReport) -> Report {
    let mut r = Report::new();
    compare_flags(&mut r, "co-Stone(A) iff co-Stone(L(A))", a.co_stone.holds, l.co_stone.holds);
    compare_flags(
        &mut r,
        "strongly co-Stone(A) iff strongly co-Stone(L(A))",
        a.strongly_co_stone.holds,
        l.strongly_co_stone.holds,
    );
    for ((name, va), (_, vl)) in a.m_conditions.verdicts().into_iter().zip(l.m_conditions.verdicts()) {
        compare_flags(&mut r, &format!("({name}) on A iff on L(A)"), va.holds, vl.holds);
    }
    r.push_flag("(I)-(V) agree on A", a.m_conditions.agree(), || format!("{:?}", a.m_conditions.flags()));
    r.push_flag("(I)-(V) agree on L(A)", l.m_conditions.agree(), || format!("{:?}", l.m_conditions.flags()));
    r.push_flag(
        "strongly co-Stone implies co-Stone",
        !a.strongly_co_stone.holds || a.co_stone.holds,
        || "A".into(),
    );
    r
}

/// Every transfer statement for one algebra.
pub fn transfer_report<A: Algebra>(ret: &Reticulation<A>, caps: &Caps) -> Result<Report> {
    let mut r = Report::new();
    if A::KIND == Kind::Residuated {
        r.extend("lambda extremes", lambda_extremes(ret));
        r.extend("lambda on B(A)", lambda_boolean(ret));
    }
    r.extend("B(A) iso", boolean_center_iso(ret));
    r.extend("mu", mu_iso(ret, caps)?.report);
    r.extend("CoAnn", crate::stone::coann_iso(ret, caps)?.report);
    r.extend("", commutes_with_coannihilator(ret, caps)?);
    r.extend("spectrum", spectrum_bijection(ret, caps)?.report);
    let opts = ClassifyOptions::default();
    let sa = classify_stone(&ret.source, caps, opts)?;
    let sl = classify_stone(&ret.lattice, caps, opts)?;
    r.extend("", classification_transfer(&sa, &sl));
    Ok(r)
}
