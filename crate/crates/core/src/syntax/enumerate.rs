use std::collections::HashMap;

use super::{Term, Tm};
use crate::signature::BindingSignature;

/// All scope-correct terms of depth `< d` in scope `n`, in the order of the
/// initial-algebra chain: variables first, then constructors in declaration
/// order, each with its arguments enumerated first-argument-outermost.
pub fn enumerate_terms(sig: &BindingSignature, n: usize, d: usize) -> Vec<Term> {
    let mut memo = HashMap::new();
    bodies(sig, n, d, &mut memo)
        .into_iter()
        .map(|body| Term::new(n, body))
        .collect()
}

/// `enumerate_terms(sig, n, d).len()`, computed without enumerating and
/// saturating at `u128::MAX`.
pub fn count_terms(sig: &BindingSignature, n: usize, d: usize) -> u128 {
    fn go(sig: &BindingSignature, n: usize, d: usize, memo: &mut HashMap<(usize, usize), u128>) -> u128 {
        if d == 0 {
            return 0;
        }
        if let Some(&c) = memo.get(&(n, d)) {
            return c;
        }
        let mut total = n as u128;
        for c in &sig.constructors {
            let prod = c
                .arity
                .iter()
                .fold(1u128, |acc, &k| acc.saturating_mul(go(sig, n + k, d - 1, memo)));
            total = total.saturating_add(prod);
        }
        memo.insert((n, d), total);
        total
    }
    go(sig, n, d, &mut HashMap::new())
}

fn bodies(sig: &BindingSignature, n: usize, d: usize, memo: &mut HashMap<(usize, usize), Vec<Tm>>) -> Vec<Tm> {
    if d == 0 {
        return Vec::new();
    }
    if let Some(v) = memo.get(&(n, d)) {
        return v.clone();
    }
    let mut out: Vec<Tm> = (0..n).map(Tm::Var).collect();
    for c in &sig.constructors {
        let args: Vec<Vec<Tm>> = c.arity.iter().map(|&k| bodies(sig, n + k, d - 1, memo)).collect();
        let mut combos: Vec<Vec<Tm>> = vec![Vec::new()];
        for choices in &args {
            combos = combos
                .into_iter()
                .flat_map(|prefix| {
                    choices.iter().map(move |a| {
                        let mut p = prefix.clone();
                        p.push(a.clone());
                        p
                    })
                })
                .collect();
        }
        out.extend(combos.into_iter().map(|args| Tm::Op(c.name.clone(), args)));
    }
    memo.insert((n, d), out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signature::parse_signature;
    use crate::syntax::check_term;
    use std::collections::HashSet;

    #[test]
    fn identity_is_the_only_closed_term_of_depth_one() {
        let sig = BindingSignature::lambda();
        let ts = enumerate_terms(&sig, 0, 2);
        assert_eq!(ts, vec![Term::new(0, Tm::op("abs", vec![Tm::var(0)]))]);
    }

    #[test]
    fn variables_only() {
        let sig = parse_signature("sig e { }").unwrap();
        for n in 0..4 {
            for d in 1..4 {
                assert_eq!(enumerate_terms(&sig, n, d).len(), n);
            }
        }
    }

    #[test]
    fn depth_zero_is_empty() {
        assert!(enumerate_terms(&BindingSignature::lambda(), 3, 0).is_empty());
    }

    #[test]
    fn counts_follow_the_recurrence() {
        // T_{d+1}(n) = n + T_d(n)^2 + T_d(n+1).
        let sig = BindingSignature::lambda();
        let count = |n: usize, d: usize| enumerate_terms(&sig, n, d).len();
        for d in 1..4 {
            for n in 0..3 {
                assert_eq!(count(n, d + 1), n + count(n, d).pow(2) + count(n + 1, d), "{n} {d}");
            }
        }
        assert_eq!([count(0, 3), count(1, 3), count(2, 3)], [5, 26, 99]);
        for d in 0..5 {
            for n in 0..3 {
                assert_eq!(count_terms(&sig, n, d), count(n, d) as u128);
            }
        }
        assert_eq!(count_terms(&sig, 0, 40), u128::MAX);
    }

    #[test]
    fn duplicate_free_scope_correct_and_shallow() {
        let sig = parse_signature("sig p { pair : [0, 0]; letin : [0, 1]; unit : []; }").unwrap();
        for n in 0..3 {
            let ts = enumerate_terms(&sig, n, 3);
            let set: HashSet<_> = ts.iter().collect();
            assert_eq!(set.len(), ts.len());
            for t in &ts {
                check_term(&sig, t).unwrap();
                assert!(t.body.depth() < 3);
            }
        }
    }
}
