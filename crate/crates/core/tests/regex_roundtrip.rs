use proptest::prelude::*;
use revsc_core::{parse_regex, regex_to_min_dfa, regex_to_nfa, RegexAst};

fn letters() -> Vec<String> {
    vec!["a".to_string(), "b".to_string()]
}

fn ast() -> impl Strategy<Value = RegexAst> {
    let leaf = prop_oneof![
        1 => Just(RegexAst::Empty),
        2 => Just(RegexAst::Epsilon),
        6 => (0..2usize).prop_map(RegexAst::Letter),
    ];
    leaf.prop_recursive(5, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| RegexAst::union(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| RegexAst::concat(l, r)),
            inner.prop_map(RegexAst::star),
        ]
    })
}

/// Membership by structural recursion on the expression.
fn matches(e: &RegexAst, w: &[usize]) -> bool {
    match e {
        RegexAst::Empty => false,
        RegexAst::Epsilon => w.is_empty(),
        RegexAst::Letter(a) => w == [*a],
        RegexAst::Union(l, r) => matches(l, w) || matches(r, w),
        RegexAst::Concat(l, r) => (0..=w.len()).any(|i| matches(l, &w[..i]) && matches(r, &w[i..])),
        RegexAst::Star(inner) => {
            w.is_empty() || (1..=w.len()).any(|i| matches(inner, &w[..i]) && matches(e, &w[i..]))
        }
    }
}

fn words(k: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..k).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn print_then_parse_is_identity(e in ast()) {
        let names = letters();
        let text = e.display(&names).to_string();
        let back = parse_regex(&text, &names).unwrap();
        prop_assert_eq!(&back, &e, "printed as {}", text);
    }

    #[test]
    fn automata_match_structural_membership(e in ast()) {
        let names = letters();
        let text = e.display(&names).to_string();
        let nfa = regex_to_nfa(&e, &names);
        let dfa = regex_to_min_dfa(&text, &names).unwrap();
        prop_assert_eq!(nfa.state_count(), e.positions() + 1);
        for w in words(2, 10) {
            let want = matches(&e, &w);
            prop_assert_eq!(nfa.accepts(&w), want, "nfa on {:?} for {}", w, text);
            prop_assert_eq!(dfa.accepts(&w), want, "dfa on {:?} for {}", w, text);
        }
    }
}

#[test]
fn table1_expressions_parse_and_print_stably() {
    let names = letters();
    for n in 2..=7 {
        let text = revsc_core::table1_expression(n).unwrap();
        let e = parse_regex(&text, &names).unwrap();
        let printed = e.display(&names).to_string();
        assert_eq!(parse_regex(&printed, &names).unwrap(), e);
    }
}

#[test]
fn syntax_errors_carry_positions() {
    let names = letters();
    for bad in ["(a+b", "a+*", "c", "a)"] {
        let err = parse_regex(bad, &names).unwrap_err();
        assert!(
            matches!(
                err,
                revsc_core::Error::Syntax { .. } | revsc_core::Error::UnknownLetter { .. }
            ),
            "{bad}: {err:?}"
        );
    }
}
