use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zfkit::enumerate::{graphs_of_order, GraphStream};
use zfkit::forcing::failed_zero_forcing_number_brute_force;
use zfkit::verify::expectations::reference_exceptions;
use zfkit::verify::{
    gap_construction, run_campaign, run_campaign_on_stream, Campaign, CampaignParams, VerifyError,
};
use zfkit::{canonical_form, Graph};

/// Relabels and shuffles the graphs of the given orders.
fn scrambled_stream(orders: std::ops::RangeInclusive<usize>, seed: u64) -> GraphStream {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gs: Vec<Graph> = Vec::new();
    for n in orders {
        for g in graphs_of_order(n, false).unwrap().iter() {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            gs.push(g.relabel(&perm));
        }
    }
    gs.shuffle(&mut rng);
    GraphStream::from_graphs(gs).unwrap()
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for c in [
        Campaign::Figure1,
        Campaign::ModuleNMinus2,
        Campaign::Exceptions16,
        Campaign::Gap,
    ] {
        let p = CampaignParams::up_to(if c == Campaign::Gap { 10 } else { 6 });
        let p = if c == Campaign::Exceptions16 {
            CampaignParams::default()
        } else {
            p
        };
        let a = run_campaign(c, p).unwrap().to_json();
        let b = run_campaign(c, p).unwrap().to_json();
        assert_eq!(a, b, "{c}");
    }
}

#[test]
fn stream_reports_ignore_labels_and_order() {
    let stream = scrambled_stream(1..=6, 7);
    for c in [
        Campaign::Figure1,
        Campaign::F0F1,
        Campaign::Isolated,
        Campaign::ModuleNMinus2,
        Campaign::DisconnectedFormula,
        Campaign::FortDuality,
        Campaign::Exceptions16,
        Campaign::ExtensionArgument,
    ] {
        let p = match c {
            Campaign::Exceptions16 | Campaign::ExtensionArgument => CampaignParams::default(),
            _ => CampaignParams::up_to(6),
        };
        let inproc = run_campaign(c, p).unwrap();
        let streamed = run_campaign_on_stream(c, p, &stream).unwrap();
        assert_eq!(inproc.to_json(), streamed.to_json(), "{c}");
    }
}

#[test]
fn gap_campaign_rejects_streams() {
    let stream = scrambled_stream(3..=3, 1);
    assert_eq!(
        run_campaign_on_stream(Campaign::Gap, CampaignParams::default(), &stream).unwrap_err(),
        VerifyError::StreamNotAccepted("gap")
    );
}

#[test]
fn witnesses_revalidate() {
    for c in Campaign::ALL {
        let p = match c {
            Campaign::Theorem21 => CampaignParams::up_to(7),
            Campaign::Figure1 => CampaignParams::up_to(7),
            _ => CampaignParams::default(),
        };
        let r = run_campaign(c, p).unwrap();
        assert!(r.invalid_witnesses().is_empty(), "{c}");
    }
}

#[test]
fn characterization_campaigns_are_clean() {
    for c in [
        Campaign::F0F1,
        Campaign::Isolated,
        Campaign::ModuleNMinus2,
        Campaign::DisconnectedFormula,
        Campaign::FortDuality,
        Campaign::ExtensionArgument,
    ] {
        let r = run_campaign(c, CampaignParams::default()).unwrap();
        assert!(r.is_clean(), "{c}: {:?}", r.discrepancies);
    }
}

#[test]
fn module_campaign_lists_disconnected_deviations() {
    let r = run_campaign(Campaign::ModuleNMinus2, CampaignParams::up_to(3)).unwrap();
    // 2K1, 3K1 and K2+K1 have order-2 modules but F = n - 1
    assert_eq!(r.counts["disconnected.deviations"], 3);
    assert_eq!(r.findings.len(), 1);
    assert!(r.is_clean());
}

/// Independent check of the census: adjacency matrix, every 3-subset,
/// every member needs two neighbors outside the subset.
fn lacks_safe_triple(g: &Graph) -> bool {
    let n = g.order();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let s = [a, b, c];
                let ok = s.iter().all(|&v| {
                    (0..n)
                        .filter(|&w| !s.contains(&w) && g.has_edge(v, w))
                        .count()
                        >= 2
                });
                if ok {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn exception_census() {
    let conn6 = graphs_of_order(6, true).unwrap();
    let oracle = conn6.iter().filter(|g| lacks_safe_triple(g)).count();
    assert_eq!(oracle, 31);

    let r = run_campaign(Campaign::Exceptions16, CampaignParams::default()).unwrap();
    assert_eq!(r.scanned, 112);
    assert_eq!(r.matches, 31);
    assert_eq!(r.counts["reference.matched"], 14);
    assert_eq!(r.counts["exceptions.not_in_reference"], 17);
    assert_eq!(r.counts["reference.not_exceptions"], 2);
    // count mismatch plus the 19-element symmetric difference
    assert_eq!(r.discrepancies.len(), 1 + 17 + 2);

    let outside: Vec<u16> = reference_exceptions()
        .into_iter()
        .filter(|(_, g)| !lacks_safe_triple(g))
        .map(|(l, _)| l)
        .collect();
    assert_eq!(outside, vec![60, 86]);
}

#[test]
fn extension_argument_resolves_every_exception() {
    let r = run_campaign(Campaign::ExtensionArgument, CampaignParams::default()).unwrap();
    assert_eq!(r.matches, 31);
    assert!(r.is_clean());
}

const GAP_FH: [usize; 9] = [3, 4, 4, 5, 5, 6, 6, 7, 7];

#[test]
fn gap_values() {
    for (i, n) in (6..=14).enumerate() {
        let p = gap_construction(n).unwrap();
        assert_eq!(failed_zero_forcing_number_brute_force(&p.g), n - 2, "n={n}");
        assert_eq!(
            failed_zero_forcing_number_brute_force(&p.h),
            GAP_FH[i],
            "n={n}"
        );
    }
    let p = gap_construction(12).unwrap();
    assert_eq!(
        failed_zero_forcing_number_brute_force(&p.g) - failed_zero_forcing_number_brute_force(&p.h),
        4
    );
}

#[test]
fn gap_difference_grows() {
    let diff: Vec<usize> = (8..=14).map(|n| n - 2 - GAP_FH[n - 6]).collect();
    assert_eq!(diff, vec![2, 2, 3, 3, 4, 4, 5]);
    assert!(diff.windows(2).all(|w| w[0] <= w[1]));
    assert!(diff.windows(3).all(|w| w[0] < w[2]));
}

#[test]
fn gap_campaign_flags_even_orders() {
    let r = run_campaign(Campaign::Gap, CampaignParams::range(8, 12)).unwrap();
    let flagged: Vec<&str> = r.discrepancies.iter().map(|d| d.claim.as_str()).collect();
    assert_eq!(
        flagged,
        vec![
            "n = 8: F(H) = floor(n/2) + 1",
            "n = 10: F(H) = floor(n/2) + 1",
            "n = 12: F(H) = floor(n/2) + 1"
        ]
    );
    assert_eq!(r.matches, 2);
}

#[test]
fn stream_duplicates_are_rejected() {
    let g = graphs_of_order(4, false).unwrap().graphs()[3].clone();
    let h = g.relabel(&[3, 2, 1, 0]);
    assert_eq!(canonical_form(&g), canonical_form(&h));
    assert!(GraphStream::from_graphs(vec![g, h]).is_err());
}
