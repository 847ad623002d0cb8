use super::*;
use crate::oracle;
use proptest::prelude::*;

fn bps(s: &str) -> AppendOnlyBps {
    AppendOnlyBps::from_parens(parse_parens(s).unwrap()).unwrap()
}

/// Linear-scan answers for a prefix.
struct Naive(Vec<bool>);

impl Naive {
    fn rank(&self, pos: usize) -> usize {
        self.0[..pos].iter().filter(|&&b| b).count()
    }
    fn select(&self, k: usize) -> usize {
        self.0.iter().enumerate().filter(|(_, &b)| b).nth(k - 1).unwrap().0 + 1
    }
    fn unclosed(&self) -> Vec<usize> {
        let mut stack = Vec::new();
        for (p, &b) in self.0.iter().enumerate() {
            if b {
                stack.push(p + 1);
            } else {
                stack.pop();
            }
        }
        stack
    }
}

fn check_against_scan(b: &AppendOnlyBps) {
    let naive = Naive(b.iter().collect());
    let n = naive.0.len();
    for pos in (0..=n).step_by(1 + n / 200) {
        assert_eq!(b.rank_open(pos).unwrap(), naive.rank(pos));
    }
    let opens = naive.rank(n);
    assert_eq!(b.open_count(), opens);
    for k in (1..=opens).step_by(1 + opens / 200) {
        assert_eq!(b.select_open(k).unwrap(), naive.select(k));
    }
    let uncl = naive.unclosed();
    assert_eq!(b.unclosed(), uncl.len());
    for (k, &p) in uncl.iter().enumerate() {
        assert_eq!(b.select_uncl(k + 1).unwrap(), p);
    }
}

#[test]
fn append_examples() {
    let mut b = AppendOnlyBps::new();
    b.append_open();
    assert_eq!((to_paren_string(b.iter()), b.unclosed()), ("(".into(), 1));
    let mut b = bps("(()");
    b.append_close().unwrap();
    assert_eq!((to_paren_string(b.iter()), b.unclosed()), ("(())".into(), 0));
    assert!(b.append_close().is_err());
    assert!(AppendOnlyBps::from_parens(parse_parens("())").unwrap()).is_err());
}

#[test]
fn rank_select_examples() {
    let b = bps("(()((");
    assert_eq!(b.rank_open(5).unwrap(), 4);
    assert_eq!(b.rank_open(0).unwrap(), 0);
    assert!(b.rank_open(6).is_err());
    assert_eq!(b.select_open(3).unwrap(), 4);
    assert_eq!(b.node_to_open(0).unwrap(), 1);
    assert_eq!(b.open_to_node(4).unwrap(), 2);
    assert!(b.open_to_node(3).is_err());

    let na = AppendOnlyBps::from_parens(oracle::bps_bruteforce(b"northamerica")).unwrap();
    assert_eq!(na.rank_open(26).unwrap(), 13);
    assert_eq!(na.node_to_open(6).unwrap(), 12);
}

#[test]
fn unclosed_examples() {
    let b = bps("(()((");
    assert_eq!(b.select_uncl(1).unwrap(), 1);
    assert_eq!(b.select_uncl(2).unwrap(), 4);
    assert_eq!(b.select_uncl(3).unwrap(), 5);
    assert!(b.select_uncl(4).is_err());
    // Four opens as printed; the first and the third remain unclosed.
    let b = bps("(()(()");
    assert_eq!(b.open_count(), 4);
    assert_eq!(b.unclosed(), 2);
    assert_eq!(b.select_uncl(1).unwrap(), 1);
    assert_eq!(b.select_uncl(2).unwrap(), 4);
    assert!(bps("()").select_uncl(1).is_err());
    assert_eq!(bps("(((").select_uncl(3).unwrap(), 3);
}

#[test]
fn copy_append_examples() {
    let mut b = bps("(()");
    b.copy_append(2, 3, 2).unwrap();
    assert_eq!(to_paren_string(b.iter()), "(()()()");
    b.copy_append(2, 3, 0).unwrap();
    assert_eq!(b.len(), 7);
    assert!(b.copy_append(0, 3, 1).is_err());
    assert!(b.copy_append(3, 8, 1).is_err());
    // ")" repeated would underflow.
    let mut b = bps("(()");
    assert!(b.copy_append(3, 3, 2).is_err());
    b.copy_append(3, 3, 1).unwrap();
    assert_eq!(to_paren_string(b.iter()), "(())");
    // Run extension on "aaaa": after node 2 is written, copy its open twice.
    let mut b = bps("(()(");
    b.copy_append(3, 4, 2).unwrap();
    b.append_closes(2).unwrap();
    assert_eq!(to_paren_string(b.iter()), to_paren_string(oracle::bps_bruteforce(b"aaaa")));
}

#[test]
fn tree_queries_on_figure_one() {
    let t = AppendOnlyBps::from_parens(oracle::bps_bruteforce(b"northamerica"))
        .unwrap()
        .finalize()
        .unwrap();
    assert_eq!(t.len_bits(), 26);
    assert_eq!(t.subtree_size(6).unwrap(), 6);
    assert_eq!(t.lambda(6).unwrap(), 6);
    assert_eq!(t.parent(9).unwrap(), 8);
    assert_eq!(t.nss(1).unwrap(), 5);
    assert_eq!(t.subtree_size(0).unwrap(), 13);
    assert!(t.parent(0).is_err());
    assert!(t.lambda(0).is_err());
    assert!(t.lambda(13).is_err());
    assert_eq!(t.lambdas(), vec![4, 3, 2, 1, 1, 6, 1, 3, 1, 1, 1, 1]);
}

#[test]
fn finalize_rejects_malformed() {
    assert!(matches!(bps("(()").finalize(), Err(crate::Error::Integrity(_))));
    assert!(matches!(bps("()()").finalize(), Err(crate::Error::Integrity(_))));
    assert!(matches!(AppendOnlyBps::new().finalize(), Err(crate::Error::Integrity(_))));
    assert!(bps("()").finalize().is_ok());
}

#[test]
fn long_sequences_cross_blocks() {
    // Deep nesting, long flat stretches and large copies across block and
    // superblock boundaries.
    let mut b = AppendOnlyBps::new();
    for _ in 0..40_000 {
        b.append_open();
    }
    b.append_closes(39_000).unwrap();
    for _ in 0..3000 {
        b.append_open();
        b.append_close().unwrap();
    }
    check_against_scan(&b);
    b.copy_append(100, 70_000, 2).unwrap();
    check_against_scan(&b);
    let open = b.unclosed();
    b.append_closes(open).unwrap();
    check_against_scan(&b);
}

#[test]
fn support_overhead_is_bounded() {
    for n in [1 << 15, 100_000, 1 << 20] {
        let text = crate::gen::random(n, 4, n as u64);
        let b = crate::build_succinct(&text);
        assert!(b.len() >= 1 << 16);
        assert!(b.support_bits() as f64 <= 0.35 * b.len() as f64, "appendable, n = {n}");
        let grown = AppendOnlyBps::from_parens(b.iter()).unwrap();
        assert!(grown.support_bits() as f64 <= 0.35 * grown.len() as f64, "grown, n = {n}");
        let tree = b.finalize().unwrap();
        assert!(tree.support_bits() as f64 <= 0.35 * tree.len_bits() as f64, "finalized, n = {n}");
    }
}

#[derive(Clone, Debug)]
enum Op {
    Open(usize),
    Close(usize),
    Copy(usize, usize, usize),
}

fn op() -> impl Strategy<Value = Op> {
    prop_oneof![
        (1usize..700).prop_map(Op::Open),
        (1usize..700).prop_map(Op::Close),
        (0usize..10_000, 0usize..1200, 0usize..4).prop_map(|(a, l, r)| Op::Copy(a, l, r)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn support_matches_scan(ops in prop::collection::vec(op(), 1..40)) {
        let mut b = AppendOnlyBps::new();
        for op in ops {
            match op {
                Op::Open(c) => (0..c).for_each(|_| b.append_open()),
                Op::Close(c) => {
                    let c = c.min(b.unclosed());
                    b.append_closes(c).unwrap();
                }
                Op::Copy(a, l, r) => {
                    if b.is_empty() { continue; }
                    let from = a % b.len() + 1;
                    let to = (from + l).min(b.len());
                    let _ = b.copy_append(from, to, r);
                }
            }
            check_against_scan(&b);
        }
    }

    #[test]
    fn tree_matches_oracle(s in prop::collection::vec(prop::sample::select(vec![b'a', b'b', b'c']), 0..3000), leaf in 6u32..10) {
        let bits = oracle::bps_bruteforce(&s);
        let t = AppendOnlyBps::from_parens(bits).unwrap()
            .finalize_with(TreeConfig { leaf_bits: 1 << leaf }).unwrap();
        let pss = oracle::pss_bruteforce(&s);
        let nss = oracle::nss_bruteforce(&s);
        prop_assert_eq!(t.text_len(), s.len());
        for i in 1..=s.len() {
            prop_assert_eq!(t.pss(i).unwrap(), pss.get(i));
            prop_assert_eq!(t.nss(i).unwrap(), nss.get(i));
        }
    }
}
