//! Cross-validation of the certified power iteration against the dense
//! oracle, and the spectral invariants over a suite of graphs.

use spectral_lab::dense::dense_spectrum_oracle;
use spectral_lab::families;
use spectral_lab::graph::Graph;
use spectral_lab::rng::SplitMix64;
use spectral_lab::spectral::{
    default_max_iter, gap_identity_check, max_entry_check, principal_pair, SpectralEstimate,
    DEFAULT_TOL,
};

fn estimate(g: &Graph) -> SpectralEstimate {
    principal_pair(g, DEFAULT_TOL, default_max_iter(g.n())).unwrap()
}

/// A mixed bag of connected graphs: fixtures plus regular-minus-edge samples.
fn suite() -> Vec<Graph> {
    let mut graphs = vec![
        families::path(3).unwrap(),
        families::path(17).unwrap(),
        families::star(4).unwrap(),
        families::star(25).unwrap(),
        families::cycle(8).unwrap(),
        families::complete(6).unwrap(),
        families::complete_bipartite(3, 5).unwrap(),
        families::petersen(),
        families::cycle_plus_chord(12).unwrap(),
        families::section4_family(2).unwrap(),
        families::section4_family(5).unwrap(),
        families::section4_family(9).unwrap(),
        families::circulant(14, &[1, 3]).unwrap(),
    ];
    let mut rng = SplitMix64::new(0xC0FFEE);
    let mut added = 0;
    let mut attempt = 0;
    while added < 12 {
        let n = 2 * (5 + rng.next_below(40));
        let k = 3 + rng.next_below(3);
        let seed = 1000 + attempt as u64;
        attempt += 1;
        let base = families::random_regular(n, k, seed).unwrap();
        if !base.is_connected() {
            continue;
        }
        let spec = families::FamilySpec::RandomRegular { n, k, seed };
        let g = families::regular_minus_edge(&spec, rng.next_below(base.m()), true).unwrap();
        graphs.push(g);
        added += 1;
    }
    graphs
}

#[test]
fn iterative_lambda1_matches_dense_oracle() {
    for g in suite() {
        let est = estimate(&g);
        let dense = dense_spectrum_oracle(&g).unwrap()[0];
        assert!(
            (est.midpoint() - dense).abs() <= 1e-8,
            "n={} iterative {} vs dense {}",
            g.n(),
            est.midpoint(),
            dense
        );
        // Enclosure soundness, up to the oracle's own accuracy.
        let acc = 1e-10 * (g.degree_profile().max_degree as f64).max(1.0);
        assert!(est.lambda1_lo - acc <= dense && dense <= est.lambda1_hi + acc);
    }
}

#[test]
fn circulant_spectra_match_cosine_sums() {
    // Eigenvalues of a circulant are sum_s 2 cos(2 pi j s / n); this checks
    // the generator and the dense oracle against each other.
    for (n, offsets) in [
        (8usize, vec![1usize]),
        (12, vec![1, 2]),
        (17, vec![2, 5]),
        (24, vec![1, 3, 7]),
        (64, vec![1, 2, 5]),
        (10, vec![1, 5]),
    ] {
        let g = families::circulant(n, &offsets).unwrap();
        let mut expected: Vec<f64> = (0..n)
            .map(|j| {
                offsets
                    .iter()
                    .map(|&s| {
                        let c =
                            (2.0 * std::f64::consts::PI * j as f64 * s as f64 / n as f64).cos();
                        // The antipodal offset s = n/2 pairs i with a single
                        // vertex, so it contributes once, not twice.
                        if 2 * s == n {
                            c
                        } else {
                            2.0 * c
                        }
                    })
                    .sum()
            })
            .collect();
        expected.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let got = dense_spectrum_oracle(&g).unwrap();
        for (a, b) in got.iter().zip(&expected) {
            assert!((a - b).abs() <= 1e-9, "n={n} offsets={offsets:?}: {a} vs {b}");
        }
    }
}

#[test]
fn gap_identities_within_residual_budget() {
    for g in suite() {
        if g.degree_profile().is_regular {
            continue;
        }
        let est = estimate(&g);
        let check = gap_identity_check(&g, &est);
        assert!(
            check.max_abs_error <= 10.0 * est.residual_norm,
            "n={}: identity error {} vs residual {}",
            g.n(),
            check.max_abs_error,
            est.residual_norm
        );
    }
}

#[test]
fn perron_positivity_and_max_entry_over_suite() {
    for g in suite() {
        let est = estimate(&g);
        assert!(est.eigvec.iter().all(|&x| x > 0.0));
        if !g.degree_profile().is_regular {
            assert_eq!(max_entry_check(&g, &est), Ok(true), "n={}", g.n());
        }
    }
}

#[test]
fn lambda1_strictly_monotone_under_edge_surgery() {
    for g in suite() {
        if !g.is_connected() {
            continue;
        }
        let est = estimate(&g);
        // Deleting any non-bridge edge must strictly lower lambda1.
        if let Some((u, v)) = g
            .edges()
            .into_iter()
            .find(|&(u, v)| g.delete_edge(u, v).unwrap().is_connected())
        {
            let smaller = estimate(&g.delete_edge(u, v).unwrap());
            assert!(
                smaller.lambda1_hi < est.lambda1_lo,
                "deletion did not separate: n={}",
                g.n()
            );
        }
        // Adding any missing edge must strictly raise lambda1.
        let non_edge = (0..g.n())
            .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
            .find(|&(u, v)| !g.has_edge(u, v));
        if let Some((u, v)) = non_edge {
            let larger = estimate(&g.add_edge(u, v).unwrap());
            assert!(
                larger.lambda1_lo > est.lambda1_hi,
                "addition did not separate: n={}",
                g.n()
            );
        }
    }
}

#[test]
fn maas_bound_dominates_every_observed_shift() {
    // For any connected H with spectral gap beta = lambda1 - lambda2 > 0 and
    // non-adjacent i, j, the lambda1 shift from adding {i, j} stays below
    // 1 + delta - beta with delta solving the Maas equation at the Perron
    // entries x_i, x_j. Checked with certified enclosures on both sides.
    let graphs = [
        families::path(8).unwrap(),
        families::section4_family(3).unwrap(),
        families::cycle_plus_chord(9).unwrap(),
        families::petersen(),
        families::complete_bipartite(3, 4).unwrap(),
    ];
    for h in graphs {
        let est = estimate(&h);
        let spectrum = dense_spectrum_oracle(&h).unwrap();
        let beta = spectrum[0] - spectrum[1];
        if beta <= 1e-9 {
            continue;
        }
        for u in 0..h.n() {
            for v in u + 1..h.n() {
                if h.has_edge(u, v) {
                    continue;
                }
                let sol =
                    spectral_lab::bounds::maas_solve_delta(beta, est.eigvec[u], est.eigvec[v])
                        .unwrap();
                let added = estimate(&h.add_edge(u, v).unwrap());
                let shift_hi = added.lambda1_hi - est.lambda1_lo;
                assert!(
                    shift_hi < sol.bound,
                    "n={} e=({u},{v}): shift {} vs Maas bound {}",
                    h.n(),
                    shift_hi,
                    sol.bound
                );
            }
        }
    }
}

#[test]
fn cycle_plus_chord_differences_shrink() {
    // lambda1(G_n) converges geometrically; successive differences must
    // shrink monotonically once n is past the small-graph regime.
    let lambda = |n: usize| {
        estimate(&families::cycle_plus_chord(n).unwrap()).midpoint()
    };
    let values: Vec<f64> = (20..=32).map(lambda).collect();
    let diffs: Vec<f64> = values.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
    for pair in diffs.windows(2) {
        assert!(pair[1] <= pair[0], "differences not shrinking: {diffs:?}");
    }
}
