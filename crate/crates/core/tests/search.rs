use potbip::census::{for_each_graphical, for_each_in_shard, graphical_sequences, shards};
use potbip::oracle::{oracle_decide, tabulate};
use potbip::search::{compute_bounds, search_with_observer};
use potbip::{decide_sequence, phase1, DegreeSequence, LcPolicy, Phase1Outcome, SearchConfig};

fn census(n: usize) -> Vec<DegreeSequence> {
    let mut out = Vec::new();
    for_each_graphical(n, |s| {
        out.push(DegreeSequence::from_sorted(s.to_vec()).unwrap())
    });
    out
}

#[test]
fn census_counts() {
    // Zero-free graphical sequences of length 1..=9.
    let want = [0, 1, 2, 7, 20, 71, 240, 871, 3148];
    for (n, &w) in (1..).zip(&want) {
        assert_eq!(census(n).len(), w, "n={n}");
    }
}

#[test]
fn iterator_and_shards_agree_with_visitor() {
    for n in 1..=9 {
        let visited = census(n);
        let iterated: Vec<_> = graphical_sequences(n).collect();
        assert_eq!(visited, iterated);
        let mut sharded = 0;
        for shard in shards(n) {
            for_each_in_shard(n, &shard, |_| sharded += 1);
        }
        assert_eq!(sharded, visited.len());
    }
}

#[test]
fn larger_budgets_never_lose_a_yes() {
    let budgets = [
        LcPolicy::Constant(1),
        LcPolicy::LinearInN(1),
        LcPolicy::Unlimited,
    ];
    for n in 4..=10 {
        for d in census(n) {
            let yes: Vec<bool> = budgets
                .iter()
                .map(|&lc| {
                    decide_sequence(&d, &SearchConfig::with_lc(lc))
                        .unwrap()
                        .is_yes()
                })
                .collect();
            assert!(yes.windows(2).all(|w| !w[0] || w[1]), "{d}: {yes:?}");
        }
    }
}

#[test]
fn unlimited_no_is_always_exact() {
    let config = SearchConfig::with_lc(LcPolicy::Unlimited);
    for n in 4..=10 {
        for d in census(n) {
            assert!(decide_sequence(&d, &config).unwrap().is_exact(), "{d}");
        }
    }
}

/// Every left side the search tests respects the static window and the
/// dynamic bound ℓ(a) >= the largest degree left out.
#[test]
fn candidates_stay_inside_the_window() {
    let config = SearchConfig::with_lc(LcPolicy::Unlimited);
    let mut seen = 0;
    for n in 4..=10 {
        for d in census(n) {
            if phase1(&d).unwrap() != Phase1Outcome::Undecided {
                continue;
            }
            let bounds = compute_bounds(&d);
            search_with_observer(&d, &bounds, &config, |a| {
                seen += 1;
                assert_eq!(2 * a.weight(), d.weight(), "{d}: {a:?}");
                assert!(
                    (bounds.ell_lo..=bounds.ell_hi).contains(&a.len()),
                    "{d}: {a:?}"
                );
                let b = potbip::Bipartition::from_left(&d, a.clone()).expect("submultiset");
                assert!(
                    b.b.parts().first().copied().unwrap_or(0) <= a.len(),
                    "{d}: {a:?}"
                );
                // The forced-left degrees are always on the left.
                let forced = bounds.a_f.parts();
                assert_eq!(&a.parts()[..forced.len()], forced, "{d}: {a:?}");
            });
        }
    }
    assert!(seen > 0);
}

#[test]
fn parallel_search_agrees_with_serial() {
    let serial = SearchConfig::with_lc(LcPolicy::Unlimited);
    let parallel = SearchConfig {
        parallel_width: 3,
        ..serial
    };
    for n in 4..=9 {
        for d in census(n) {
            let s = decide_sequence(&d, &serial).unwrap();
            let p = decide_sequence(&d, &parallel).unwrap();
            assert_eq!(s.is_yes(), p.is_yes(), "{d}");
            if let Some(w) = p.witness() {
                assert!(w.is_witness_for(&d));
            }
        }
    }
}

#[test]
fn tabulate_is_independent_of_thread_count() {
    let config = SearchConfig::with_lc(LcPolicy::Constant(1));
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| tabulate(9, &config))
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn oracle_witnesses_are_valid() {
    for n in 2..=9 {
        for d in census(n) {
            if let Some(w) = oracle_decide(&d).witness() {
                assert!(w.is_witness_for(&d), "{d}");
            }
        }
    }
}
