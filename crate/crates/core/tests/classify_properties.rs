mod common;

use proptest::prelude::*;
use seqlogic::classify::{
    classify, is_root_active, is_solvable, RootActivity, Solvability, UnsolvableClass, Verdict,
    DEFAULT_DEPTH,
};
use seqlogic::logic::{conj, disj, implies, neg, representative, Style};
use seqlogic::parse;
use seqlogic::term::{app, Term};
use seqlogic::trees::{
    approximates, berarducci_tree, bohm_tree, levy_longo_tree, HeadSym, TreeNode,
};

use common::{closed_term, rename_bound};

const ZOO: &[&str] = &[
    "OMEGA",
    "OMEGA I",
    r"\x. OMEGA",
    "THETA K",
    r"THETA (\x. x y)",
    r"THETA (\x. x I)",
    r"(\p. p p F T) (\p. p p F T)",
    r"\v. THETA (\x y z. x (y z)) v",
    "THETA",
    "THETA x",
    "I",
    "K",
    "T",
    "F",
    "TI",
    "FI",
    r"\x. x OMEGA",
    r"(\x. x x x) (\x. x x x)",
];

fn zoo() -> Vec<Term> {
    ZOO.iter().map(|s| parse(s).unwrap()).collect()
}

/// Random closed terms, zoo members, and the two glued together.
fn mixed() -> impl Strategy<Value = Term> {
    let zoo_member = prop::sample::select(zoo());
    prop_oneof![
        closed_term(16),
        zoo_member.clone(),
        (zoo_member.clone(), closed_term(8)).prop_map(|(z, t)| app(z, t)),
        (closed_term(8), zoo_member).prop_map(|(t, z)| app(t, z)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn alpha_equivalent_inputs_get_the_same_verdict(t in mixed()) {
        let r = rename_bound(&t.expand(), &mut 0);
        let (a, b) = (classify(&t, 400, DEFAULT_DEPTH), classify(&r, 400, DEFAULT_DEPTH));
        prop_assert_eq!(a.class(), b.class());
        prop_assert_eq!(a.is_definite(), b.is_definite());
        prop_assert_eq!(
            matches!(a, Verdict::Solvable { .. }),
            matches!(b, Verdict::Solvable { .. })
        );
    }

    #[test]
    fn definite_verdicts_survive_more_fuel(t in mixed(), fuel in 5usize..200) {
        let v = classify(&t, fuel, DEFAULT_DEPTH);
        if v.is_definite() {
            for more in [fuel + 1, 2 * fuel, 10 * fuel] {
                prop_assert_eq!(&classify(&t, more, DEFAULT_DEPTH), &v);
            }
        }
    }

    #[test]
    fn evidence_replays(t in mixed()) {
        if let Verdict::Unsolvable { evidence, .. } = classify(&t, 400, DEFAULT_DEPTH) {
            prop_assert!(evidence.replay(), "{}", evidence.describe());
        }
        if let RootActivity::Yes { evidence } = is_root_active(&t, 400) {
            prop_assert!(evidence.replay(), "{}", evidence.describe());
        }
    }

    #[test]
    fn solvability_agrees_with_classify(t in mixed()) {
        let v = classify(&t, 400, DEFAULT_DEPTH);
        match is_solvable(&t, 400) {
            Solvability::Yes => prop_assert!(matches!(v, Verdict::Solvable { .. }), "{}", v),
            Solvability::No(c) => prop_assert_eq!(v.class(), Some(c)),
            Solvability::Unknown => prop_assert!(!v.is_definite()),
        }
    }

    #[test]
    fn trees_refine_each_other(t in mixed(), depth in 1usize..6) {
        let b = bohm_tree(&t, depth, 300);
        let l = levy_longo_tree(&t, depth, 300);
        let r = berarducci_tree(&t, depth, 300);
        prop_assert!(approximates(&b, &l), "{} vs {}", b, l);
        prop_assert!(approximates(&l, &r), "{} vs {}", l, r);
        prop_assert!(approximates(&b, &r), "{} vs {}", b, r);
        prop_assert_eq!(&b, &bohm_tree(&t, depth, 300));
        prop_assert_eq!(&l, &levy_longo_tree(&t, depth, 300));
        prop_assert_eq!(&r, &berarducci_tree(&t, depth, 300));
    }
}

#[test]
fn unsolvable_class_is_closed_under_connectives() {
    for style in [Style::Church, Style::LambdaI] {
        for class in [UnsolvableClass::HA, UnsolvableClass::IL, UnsolvableClass::O] {
            let u = representative(class, style);
            let images = [
                neg(u.clone(), style),
                conj(u.clone(), style.truth()),
                conj(u.clone(), style.falsity()),
                disj(u.clone(), style.truth()),
                disj(u.clone(), style.falsity()),
                implies(u.clone(), style.truth(), style),
                implies(u.clone(), style.falsity(), style),
            ];
            for m in images {
                assert_eq!(
                    classify(&m, 1000, DEFAULT_DEPTH).class(),
                    Some(class),
                    "{m}"
                );
            }
            assert_eq!(is_solvable(&neg(u, style), 1000), Solvability::No(class));
        }
    }
}

#[test]
fn berarducci_root_shape_follows_the_class() {
    let mut checked = 0;
    for style in [Style::Church, Style::LambdaI] {
        for class in [UnsolvableClass::HA, UnsolvableClass::IL, UnsolvableClass::O] {
            let u = representative(class, style);
            let terms = [
                u.clone(),
                neg(u.clone(), style),
                conj(u.clone(), style.falsity()),
                disj(u.clone(), style.truth()),
            ];
            for t in terms {
                assert_eq!(classify(&t, 1000, DEFAULT_DEPTH).class(), Some(class));
                let tree = berarducci_tree(&t, 5, 1000);
                let ok = match (class, &tree) {
                    (UnsolvableClass::HA, TreeNode::Bot { .. }) => true,
                    (
                        UnsolvableClass::HA,
                        TreeNode::Head {
                            head: HeadSym::Bot(_),
                            ..
                        },
                    ) => true,
                    (
                        UnsolvableClass::IL,
                        TreeNode::Head {
                            head: HeadSym::Cut(_),
                            args,
                            ..
                        },
                    ) => !args.is_empty(),
                    (UnsolvableClass::O, TreeNode::LamStream { binders, rest }) => {
                        binders.len() == 5 && matches!(**rest, TreeNode::Cut { .. })
                    }
                    _ => false,
                };
                assert!(ok, "{class:?}: {t} has Berarducci tree {tree}");
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 24);
}
