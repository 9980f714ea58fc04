//! Closed-form spectral gap bounds and the verifiers that compare certified
//! enclosures against them.
//!
//! Every inequality checked here is strict, so verdicts are decided on
//! certified intervals: a check passes only when the whole enclosure sits
//! strictly on the right side of the bound. When an enclosure straddles a
//! bound the verifier escalates (tolerance / 100 down to 1e-13, then the
//! dense oracle for n <= 512) and reports `Inconclusive` if still undecided,
//! never a spurious failure. An enclosure that lands strictly on the wrong
//! side of a proven bound is reported as an error: it can only mean a solver
//! defect.

use thiserror::Error;

use crate::dense::{dense_spectrum_oracle, DENSE_LIMIT};
use crate::graph::{DegreeProfile, Graph};
use crate::spectral::{default_max_iter, lambda2, principal_pair, SpectralError};

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is regular")]
    RegularGraph,
    #[error("graph is not regular")]
    NotRegular,
    #[error("deleting {{{u}, {v}}} disconnects the graph")]
    DisconnectedAfterDeletion { u: usize, v: usize },
    #[error("beta must be positive, got {0}")]
    NonPositiveBeta(f64),
    #[error("certified enclosure violates a proven bound ({0}); this is a solver defect")]
    BoundViolated(String),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// The main gap bound for connected irregular graphs: 1/(nD).
pub fn bound_main(n: usize, diameter: usize) -> f64 {
    1.0 / (n as f64 * diameter as f64)
}

/// The earlier bound 1/(n(D + 1/(nDelta - 2m))). The slack nDelta - 2m is
/// checked in integer arithmetic; it is at least 1 exactly when the graph is
/// irregular with maximum degree Delta.
pub fn bound_cgn(
    n: usize,
    diameter: usize,
    max_degree: usize,
    m: usize,
) -> Result<f64, BoundsError> {
    // 2m <= n * Delta by the handshake identity; a violation means the
    // arguments do not come from a graph.
    let slack = (n * max_degree)
        .checked_sub(2 * m)
        .unwrap_or_else(|| panic!("2m = {} exceeds n*Delta = {}", 2 * m, n * max_degree));
    if slack == 0 {
        return Err(BoundsError::RegularGraph);
    }
    Ok(1.0 / (n as f64 * (diameter as f64 + 1.0 / slack as f64)))
}

/// Diameter bound 3(n+2)/Delta for a regular graph minus one edge in the
/// dense regime Delta = Theta(n).
pub fn diameter_bound_dense(n: usize, max_degree: usize) -> f64 {
    3.0 * (n as f64 + 2.0) / max_degree as f64
}

/// Lower bound 2m/n + 2/(4m+1) on lambda1, valid for graphs with at least
/// two vertices of maximum degree and at least two of smaller degree.
pub fn nikiforov_lower_bound(n: usize, m: usize) -> f64 {
    2.0 * m as f64 / n as f64 + 2.0 / (4.0 * m as f64 + 1.0)
}

/// Hypothesis of the lower bound above.
pub fn nikiforov_hypothesis(profile: &DegreeProfile) -> bool {
    let at_max = profile
        .degrees
        .iter()
        .filter(|&&d| d == profile.max_degree)
        .count();
    let below = profile.degrees.len() - at_max;
    at_max >= 2 && below >= 2
}

/// Enclosure of (Delta - lambda1) * n * D from a certified gap enclosure.
pub fn constant_c(gap_lo: f64, gap_hi: f64, n: usize, diameter: usize) -> (f64, f64) {
    let scale = n as f64 * diameter as f64;
    (gap_lo * scale, gap_hi * scale)
}

/// Two-sided bound on lambda1(H + e) - lambda1(H) for a connected k-regular
/// H. The lower bound always applies; the upper bound needs k - lambda2 > 1
/// and is `None` otherwise.
pub fn edge_addition_bounds(k: usize, n: usize, lambda2: f64) -> (f64, Option<f64>) {
    let kf = k as f64;
    let lower = 2.0 / n as f64 * (1.0 + 1.0 / (2.0 * (kf + 1.0)));
    let upper = if kf - lambda2 > 1.0 {
        Some(2.0 / n as f64 * (1.0 + 1.0 / (kf - lambda2 - 1.0)))
    } else {
        None
    };
    (lower, upper)
}

/// Solution of the Maas scalar equation
/// `delta (1+delta)(2+delta) / ((xi+xj)^2 + delta (2+delta+2 xi xj)) = beta`.
#[derive(Debug, Clone, PartialEq)]
pub struct MaasSolution {
    pub beta: f64,
    pub delta: f64,
    /// The resulting upper bound 1 + delta - beta on the lambda1 shift.
    pub bound: f64,
    /// Equivalent form 2 beta / (delta n), filled in when xi = xj = 1/sqrt(n)
    /// (the regular case, where n is recovered as 1/xi^2).
    pub bound_regular_form: Option<f64>,
    pub xi: f64,
    pub xj: f64,
}

/// Bisection tolerance for the Maas equation.
const MAAS_DELTA_TOL: f64 = 1e-13;

/// Solves the Maas equation for its unique positive root by bisection.
///
/// The left side is continuous, 0 at delta = 0 and grows without bound, so a
/// sign change is bracketed on [0, B] with B = beta + (xi+xj)^2 beta + 2 (the
/// bracket is verified and doubled if ever insufficient). xi = xj = 0 is the
/// documented degenerate limit where the equation collapses to
/// 1 + delta = beta; the boundary root delta = max(beta - 1, 0) is returned.
pub fn maas_solve_delta(beta: f64, xi: f64, xj: f64) -> Result<MaasSolution, BoundsError> {
    if beta.is_nan() || beta <= 0.0 {
        return Err(BoundsError::NonPositiveBeta(beta));
    }
    assert!(xi >= 0.0 && xj >= 0.0, "eigenvector entries are nonnegative");
    let c = (xi + xj) * (xi + xj);
    let p = xi * xj;

    let delta = if c == 0.0 {
        (beta - 1.0).max(0.0)
    } else {
        let f = |d: f64| d * (1.0 + d) * (2.0 + d) / (c + d * (2.0 + d + 2.0 * p));
        let mut lo = 0.0f64;
        let mut hi = beta + c * beta + 2.0;
        let mut guard = 0;
        while f(hi) < beta {
            hi *= 2.0;
            guard += 1;
            assert!(guard < 64, "Maas bracket failed to cover the root");
        }
        while hi - lo > MAAS_DELTA_TOL {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                // Interval at floating-point resolution.
                break;
            }
            if f(mid) < beta {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    };

    let bound = 1.0 + delta - beta;
    let bound_regular_form = if xi == xj && xi > 0.0 && delta > 0.0 {
        // xi = 1/sqrt(n) gives 2 beta / (delta n) = 2 beta xi^2 / delta.
        Some(2.0 * beta * xi * xi / delta)
    } else {
        None
    };
    Ok(MaasSolution {
        beta,
        delta,
        bound,
        bound_regular_form,
        xi,
        xj,
    })
}

/// Closed-form root of the Maas equation in the regular case
/// xi = xj = 1/sqrt(n): the equation reduces to the quadratic
/// `delta^2 + (1-beta) delta - 2 beta / n = 0`. Used as an independent oracle
/// for the bisection route.
pub fn maas_delta_regular(beta: f64, n: usize) -> f64 {
    let b1 = beta - 1.0;
    0.5 * (b1 + (b1 * b1 + 8.0 * beta / n as f64).sqrt())
}

/// Three-valued strict comparison of a certified interval and a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tri {
    True,
    False,
    Straddle,
}

fn tri_above(lo: f64, hi: f64, bound: f64) -> Tri {
    if lo > bound {
        Tri::True
    } else if hi <= bound {
        Tri::False
    } else {
        Tri::Straddle
    }
}

fn tri_below(lo: f64, hi: f64, bound: f64) -> Tri {
    if hi < bound {
        Tri::True
    } else if lo >= bound {
        Tri::False
    } else {
        Tri::Straddle
    }
}

const ESCALATED_MIN_TOL: f64 = 1e-13;
const DENSE_ORACLE_ACCURACY: f64 = 1e-10;

/// Certified lambda1 enclosure at escalating precision. `decided` is queried
/// after each level; once it returns true the current enclosure is final.
/// Levels: power iteration at `tol`, at max(tol/100, 1e-13), then the dense
/// oracle when the graph is small enough. Returns the last enclosure
/// obtained even when still undecided.
pub(crate) fn lambda1_enclosure_escalated(
    g: &Graph,
    tol: f64,
    decided: impl Fn(f64, f64) -> bool,
) -> Result<(f64, f64), BoundsError> {
    let max_iter = default_max_iter(g.n());
    let mut enclosure: Option<(f64, f64)> = None;
    let mut convergence_failure: Option<SpectralError> = None;

    // Tolerance ladder: divide by 100 down to the floor.
    let mut levels = vec![tol];
    let mut t = tol;
    while t > ESCALATED_MIN_TOL {
        t = (t / 100.0).max(ESCALATED_MIN_TOL);
        levels.push(t);
    }

    for t in levels {
        match principal_pair(g, t, max_iter) {
            Ok(est) => {
                let enc = (est.lambda1_lo, est.lambda1_hi);
                enclosure = Some(enc);
                if decided(enc.0, enc.1) {
                    return Ok(enc);
                }
            }
            Err(e @ SpectralError::NoConvergence { .. }) => {
                convergence_failure = Some(e);
                break;
            }
            Err(e) => return Err(e.into()),
        }
    }

    if g.n() <= DENSE_LIMIT {
        let spectrum = dense_spectrum_oracle(g)?;
        let acc = DENSE_ORACLE_ACCURACY * (g.degree_profile().max_degree as f64).max(1.0);
        let enc = (spectrum[0] - acc, spectrum[0] + acc);
        return Ok(enc);
    }

    match enclosure {
        Some(enc) => Ok(enc),
        None => Err(convergence_failure.expect("no enclosure and no failure").into()),
    }
}

/// Per-graph record of the certified gap against the applicable bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct GapReport {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub diameter: usize,
    pub lambda1_lo: f64,
    pub lambda1_hi: f64,
    /// Gap enclosure: gap_lo = Delta - lambda1_hi, gap_hi = Delta - lambda1_lo.
    pub gap_lo: f64,
    pub gap_hi: f64,
    pub bound_main: f64,
    pub bound_cgn: f64,
    pub c_lo: f64,
    pub c_hi: f64,
    pub verdict: Verdict,
    /// 2/n and its verdict, filled in by the edge-deletion corollary check.
    pub bound_upper: Option<f64>,
    pub verdict_upper: Option<Verdict>,
}

fn tri_to_verdict(t: Tri, what: &str, detail: String) -> Result<Verdict, BoundsError> {
    match t {
        Tri::True => Ok(Verdict::Pass),
        Tri::Straddle => Ok(Verdict::Inconclusive),
        Tri::False => Err(BoundsError::BoundViolated(format!("{what}: {detail}"))),
    }
}

/// Checks Delta - lambda1 > 1/(nD) on a connected irregular graph, recording
/// the weaker bound and the c constant alongside.
pub fn verify_main_theorem(g: &Graph, tol: f64) -> Result<GapReport, BoundsError> {
    let summary = g.distance_summary();
    if !summary.connected {
        return Err(BoundsError::NotConnected);
    }
    let profile = g.degree_profile();
    if profile.is_regular {
        return Err(BoundsError::RegularGraph);
    }
    let n = g.n();
    let diameter = summary.diameter.unwrap();
    let delta = profile.max_degree as f64;
    let bm = bound_main(n, diameter);
    let bcgn = bound_cgn(n, diameter, profile.max_degree, g.m())?;

    let (lo, hi) = lambda1_enclosure_escalated(g, tol, |lo, hi| {
        tri_above(delta - hi, delta - lo, bm) != Tri::Straddle
    })?;
    let (gap_lo, gap_hi) = (delta - hi, delta - lo);
    let verdict = tri_to_verdict(
        tri_above(gap_lo, gap_hi, bm),
        "main gap bound",
        format!("gap in [{gap_lo}, {gap_hi}] vs 1/(nD) = {bm}"),
    )?;
    let (c_lo, c_hi) = constant_c(gap_lo, gap_hi, n, diameter);
    Ok(GapReport {
        n,
        m: g.m(),
        max_degree: profile.max_degree,
        diameter,
        lambda1_lo: lo,
        lambda1_hi: hi,
        gap_lo,
        gap_hi,
        bound_main: bm,
        bound_cgn: bcgn,
        c_lo,
        c_hi,
        verdict,
        bound_upper: None,
        verdict_upper: None,
    })
}

/// Deletes one edge of a regular graph and checks the sandwich
/// 2/n > Delta - lambda1(G \ e) > 1/(nD'), with D' the diameter after the
/// deletion.
pub fn edge_deletion_report(
    g: &Graph,
    u: usize,
    v: usize,
    tol: f64,
) -> Result<GapReport, BoundsError> {
    let profile = g.degree_profile();
    if !profile.is_regular {
        return Err(BoundsError::NotRegular);
    }
    let deleted = g.delete_edge(u, v)?;
    if !deleted.is_connected() {
        return Err(BoundsError::DisconnectedAfterDeletion { u, v });
    }

    let n = deleted.n();
    let diameter = deleted.distance_summary().diameter.unwrap();
    let delta = profile.max_degree as f64;
    let bm = bound_main(n, diameter);
    let upper = 2.0 / n as f64;
    let bcgn = bound_cgn(n, diameter, profile.max_degree, deleted.m())?;

    let (lo, hi) = lambda1_enclosure_escalated(&deleted, tol, |lo, hi| {
        let (gl, gh) = (delta - hi, delta - lo);
        tri_above(gl, gh, bm) != Tri::Straddle && tri_below(gl, gh, upper) != Tri::Straddle
    })?;
    let (gap_lo, gap_hi) = (delta - hi, delta - lo);
    let verdict = tri_to_verdict(
        tri_above(gap_lo, gap_hi, bm),
        "deletion lower bound",
        format!("gap in [{gap_lo}, {gap_hi}] vs 1/(nD') = {bm}"),
    )?;
    let verdict_upper = tri_to_verdict(
        tri_below(gap_lo, gap_hi, upper),
        "deletion upper bound",
        format!("gap in [{gap_lo}, {gap_hi}] vs 2/n = {upper}"),
    )?;
    let (c_lo, c_hi) = constant_c(gap_lo, gap_hi, n, diameter);
    Ok(GapReport {
        n,
        m: deleted.m(),
        max_degree: profile.max_degree,
        diameter,
        lambda1_lo: lo,
        lambda1_hi: hi,
        gap_lo,
        gap_hi,
        bound_main: bm,
        bound_cgn: bcgn,
        c_lo,
        c_hi,
        verdict,
        bound_upper: Some(upper),
        verdict_upper: Some(verdict_upper),
    })
}

/// Certified check of the edge-addition theorem on a connected k-regular
/// graph plus one new edge.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeAddReport {
    pub k: usize,
    pub n: usize,
    pub lambda2: f64,
    pub lower: f64,
    /// `None` when k - lambda2 <= 1 (upper bound inapplicable).
    pub upper: Option<f64>,
    /// Enclosure of lambda1(H + e) - k; lambda1(H) = k exactly for a
    /// connected regular H.
    pub observed_lo: f64,
    pub observed_hi: f64,
    pub verdict: Verdict,
}

pub fn verify_edge_addition(
    h: &Graph,
    u: usize,
    v: usize,
    tol: f64,
) -> Result<EdgeAddReport, BoundsError> {
    let profile = h.degree_profile();
    if !profile.is_regular {
        return Err(BoundsError::NotRegular);
    }
    if !h.is_connected() {
        return Err(BoundsError::NotConnected);
    }
    let added = h.add_edge(u, v)?;

    let k = profile.max_degree;
    let n = h.n();
    let l2 = lambda2(h, tol)?;
    let (lower, upper) = edge_addition_bounds(k, n, l2.lambda2);
    if let Some(b) = upper {
        // Holds for every lambda2 >= -k, but checked rather than assumed.
        assert!(lower < b, "addition bounds inverted: {lower} >= {b}");
    }

    let kf = k as f64;
    let (lo, hi) = lambda1_enclosure_escalated(&added, tol, |lo, hi| {
        let (ol, oh) = (lo - kf, hi - kf);
        let lower_done = tri_above(ol, oh, lower) != Tri::Straddle;
        let upper_done = upper.is_none_or(|b| tri_below(ol, oh, b) != Tri::Straddle);
        lower_done && upper_done
    })?;
    let (observed_lo, observed_hi) = (lo - kf, hi - kf);

    let mut verdict = tri_to_verdict(
        tri_above(observed_lo, observed_hi, lower),
        "addition lower bound",
        format!("shift in [{observed_lo}, {observed_hi}] vs {lower}"),
    )?;
    if let Some(b) = upper {
        let upper_verdict = tri_to_verdict(
            tri_below(observed_lo, observed_hi, b),
            "addition upper bound",
            format!("shift in [{observed_lo}, {observed_hi}] vs {b}"),
        )?;
        if upper_verdict == Verdict::Inconclusive {
            verdict = Verdict::Inconclusive;
        }
    }

    Ok(EdgeAddReport {
        k,
        n,
        lambda2: l2.lambda2,
        lower,
        upper,
        observed_lo,
        observed_hi,
        verdict,
    })
}

/// The Nikiforov lower-bound check. The hypothesis (at least two vertices of
/// maximum degree and at least two of smaller degree) is tested explicitly;
/// when it fails the check is skipped, not guessed.
#[derive(Debug, Clone, PartialEq)]
pub struct NikiforovReport {
    pub bound: f64,
    pub hypothesis_satisfied: bool,
    /// `None` exactly when the hypothesis fails.
    pub verdict: Option<Verdict>,
}

pub fn nikiforov_report(g: &Graph, tol: f64) -> Result<NikiforovReport, BoundsError> {
    if !g.is_connected() {
        return Err(BoundsError::NotConnected);
    }
    let profile = g.degree_profile();
    let bound = nikiforov_lower_bound(g.n(), g.m());
    if !nikiforov_hypothesis(&profile) {
        return Ok(NikiforovReport {
            bound,
            hypothesis_satisfied: false,
            verdict: None,
        });
    }
    let (lo, hi) =
        lambda1_enclosure_escalated(g, tol, |lo, hi| tri_above(lo, hi, bound) != Tri::Straddle)?;
    let verdict = tri_to_verdict(
        tri_above(lo, hi, bound),
        "Nikiforov lower bound",
        format!("lambda1 in [{lo}, {hi}] vs {bound}"),
    )?;
    Ok(NikiforovReport {
        bound,
        hypothesis_satisfied: true,
        verdict: Some(verdict),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Graph;
    use crate::spectral::DEFAULT_TOL;

    /// Containment with rounding slack; see the note in the spectral tests.
    fn contains(lo: f64, hi: f64, x: f64) -> bool {
        lo - 1e-12 <= x && x <= hi + 1e-12
    }

    #[test]
    fn bound_main_arithmetic() {
        assert!((bound_main(7, 3) - 1.0 / 21.0).abs() < 1e-15);
        assert_eq!(bound_main(4, 2), 0.125);
        assert_eq!(bound_main(2, 1), 0.5);
    }

    #[test]
    fn bound_cgn_arithmetic() {
        // section4(3): n=7, D=3, Delta=3, m=10, slack 1.
        let b = bound_cgn(7, 3, 3, 10).unwrap();
        assert!((b - 1.0 / 28.0).abs() < 1e-15);
        // Star on 4 vertices: slack = 12 - 6 = 6.
        let b = bound_cgn(4, 2, 3, 3).unwrap();
        assert!((b - 1.0 / (4.0 * (2.0 + 1.0 / 6.0))).abs() < 1e-15);
        // Regular input rejected on integer arithmetic.
        assert!(matches!(
            bound_cgn(6, 3, 2, 6),
            Err(BoundsError::RegularGraph)
        ));
    }

    #[test]
    fn cgn_is_weaker_than_main() {
        for (n, d, delta, m) in [(7, 3, 3, 10), (4, 2, 3, 3), (100, 9, 5, 220)] {
            let cgn = bound_cgn(n, d, delta, m).unwrap();
            assert!(cgn < bound_main(n, d));
        }
    }

    #[test]
    fn main_theorem_star_and_path() {
        // Star on 4: gap = 3 - sqrt(3) vs 1/8.
        let r = verify_main_theorem(&families::star(4).unwrap(), DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let exact = 3.0 - 3f64.sqrt();
        assert!(contains(r.gap_lo, r.gap_hi, exact));
        assert_eq!(r.bound_main, 0.125);

        // P_3: gap = 2 - sqrt(2) vs 1/6.
        let r = verify_main_theorem(&families::path(3).unwrap(), DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let exact = 2.0 - 2f64.sqrt();
        assert!(contains(r.gap_lo, r.gap_hi, exact));
    }

    #[test]
    fn main_theorem_section4() {
        let r = verify_main_theorem(&families::section4_family(3).unwrap(), DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!((r.n, r.m, r.max_degree, r.diameter), (7, 10, 3, 3));
        assert!((r.bound_main - 1.0 / 21.0).abs() < 1e-15);
        assert!((r.bound_cgn - 1.0 / 28.0).abs() < 1e-15);
        assert!(r.c_lo > 1.0);
    }

    #[test]
    fn main_theorem_rejects_regular_and_disconnected() {
        assert!(matches!(
            verify_main_theorem(&families::cycle(6).unwrap(), DEFAULT_TOL),
            Err(BoundsError::RegularGraph)
        ));
        let g = Graph::build(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            verify_main_theorem(&g, DEFAULT_TOL),
            Err(BoundsError::NotConnected)
        ));
    }

    #[test]
    fn deletion_sandwich_cycle6() {
        // C_6 minus an edge is P_6 with lambda1 = 2 cos(pi/7).
        let r = edge_deletion_report(&families::cycle(6).unwrap(), 0, 1, DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.verdict_upper, Some(Verdict::Pass));
        assert_eq!(r.diameter, 5);
        let exact = 2.0 - 2.0 * (std::f64::consts::PI / 7.0).cos();
        assert!(contains(r.gap_lo, r.gap_hi, exact));
        assert_eq!(r.bound_upper, Some(1.0 / 3.0));
    }

    #[test]
    fn deletion_sandwich_k4() {
        // K_4 minus an edge: lambda1 = (1 + sqrt(17))/2.
        let r = edge_deletion_report(&families::complete(4).unwrap(), 0, 1, DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.verdict_upper, Some(Verdict::Pass));
        let exact = 3.0 - (1.0 + 17f64.sqrt()) / 2.0;
        assert!(contains(r.gap_lo, r.gap_hi, exact));
    }

    #[test]
    fn deletion_sandwich_petersen() {
        let p = families::petersen();
        for (u, v) in p.edges() {
            let r = edge_deletion_report(&p, u, v, DEFAULT_TOL).unwrap();
            assert_eq!(r.verdict, Verdict::Pass);
            assert_eq!(r.verdict_upper, Some(Verdict::Pass));
            assert_eq!(r.diameter, 4);
        }
    }

    #[test]
    fn deletion_rejections() {
        assert!(matches!(
            edge_deletion_report(&families::star(4).unwrap(), 0, 1, DEFAULT_TOL),
            Err(BoundsError::NotRegular)
        ));
        // K_2 is 1-regular and deleting its only edge disconnects it.
        let k2 = families::complete(2).unwrap();
        assert!(matches!(
            edge_deletion_report(&k2, 0, 1, DEFAULT_TOL),
            Err(BoundsError::DisconnectedAfterDeletion { .. })
        ));
    }

    #[test]
    fn dense_diameter_bound_values() {
        assert!((diameter_bound_dense(10, 5) - 7.2).abs() < 1e-15);
        assert!((diameter_bound_dense(10, 3) - 12.0).abs() < 1e-15);
        // Petersen minus an edge: diameter 4 stays below 3(n+2)/Delta = 12.
        let r = edge_deletion_report(&families::petersen(), 0, 1, DEFAULT_TOL).unwrap();
        assert!((r.diameter as f64) < diameter_bound_dense(10, 3));
    }

    #[test]
    fn nikiforov_formula_and_hypothesis() {
        assert!((nikiforov_lower_bound(4, 4) - (2.0 + 2.0 / 17.0)).abs() < 1e-15);

        // C_5 plus a chord: n=5, m=6, bound 2.48; two degree-3 vertices and
        // three degree-2 vertices satisfy the hypothesis.
        let g = families::cycle_plus_chord(5).unwrap();
        let r = nikiforov_report(&g, DEFAULT_TOL).unwrap();
        assert!(r.hypothesis_satisfied);
        assert!((r.bound - 2.48).abs() < 1e-12);
        assert_eq!(r.verdict, Some(Verdict::Pass));

        // Petersen minus an edge: m = 14, bound = 2.8 + 2/57, and
        // lambda1 = 2.8558 clears it.
        let g = families::petersen().delete_edge(0, 1).unwrap();
        let r = nikiforov_report(&g, DEFAULT_TOL).unwrap();
        assert!(r.hypothesis_satisfied);
        assert!((r.bound - (2.8 + 2.0 / 57.0)).abs() < 1e-12);
        assert_eq!(r.verdict, Some(Verdict::Pass));

        // A star has a single vertex of maximum degree: hypothesis fails,
        // check is skipped rather than guessed.
        let r = nikiforov_report(&families::star(5).unwrap(), DEFAULT_TOL).unwrap();
        assert!(!r.hypothesis_satisfied);
        assert_eq!(r.verdict, None);
    }

    #[test]
    fn maas_worked_example() {
        // beta = 2, n = 10: delta = (1 + sqrt(2.6))/2.
        let xi = 1.0 / 10f64.sqrt();
        let sol = maas_solve_delta(2.0, xi, xi).unwrap();
        let exact = (1.0 + 2.6f64.sqrt()) / 2.0;
        assert!((sol.delta - exact).abs() <= 1e-7);
        assert!((sol.delta - 1.3062257).abs() <= 1e-7);
        assert!((sol.bound - (exact - 1.0)).abs() <= 1e-7);

        // Regular-case identity 1 + delta - beta = 2 beta / (delta n).
        let regular = sol.bound_regular_form.unwrap();
        assert!((sol.bound - regular).abs() <= 1e-12);
    }

    #[test]
    fn maas_bisection_matches_quadratic_oracle() {
        for &beta in &[1.01, 1.1, 2.0, 5.0, 10.0] {
            for &n in &[4usize, 10, 100, 10_000] {
                let xi = 1.0 / (n as f64).sqrt();
                let sol = maas_solve_delta(beta, xi, xi).unwrap();
                let oracle = maas_delta_regular(beta, n);
                assert!(
                    (sol.delta - oracle).abs() <= 1e-11,
                    "beta={beta}, n={n}: {} vs {oracle}",
                    sol.delta
                );
                let regular = sol.bound_regular_form.unwrap();
                assert!((sol.bound - regular).abs() <= 1e-12 * beta.max(1.0));
            }
        }
    }

    #[test]
    fn maas_degenerate_and_rejection() {
        let sol = maas_solve_delta(1.0, 0.0, 0.0).unwrap();
        assert_eq!(sol.delta, 0.0);
        assert_eq!(sol.bound, 0.0);
        assert_eq!(sol.bound_regular_form, None);

        assert!(matches!(
            maas_solve_delta(0.0, 0.1, 0.1),
            Err(BoundsError::NonPositiveBeta(_))
        ));
    }

    #[test]
    fn addition_bounds_fixtures() {
        // Petersen: k=3, n=10, lambda2=1.
        let (lower, upper) = edge_addition_bounds(3, 10, 1.0);
        assert!((lower - 0.225).abs() < 1e-15);
        assert!((upper.unwrap() - 0.4).abs() < 1e-15);

        // Cycles: k=2, lambda2 = 2 cos(2 pi / n); upper inapplicable from
        // n = 6 onwards.
        let l2 = |n: usize| 2.0 * (2.0 * std::f64::consts::PI / n as f64).cos();
        assert!(edge_addition_bounds(2, 5, l2(5)).1.is_some());
        for n in 6..40 {
            assert!(edge_addition_bounds(2, n, l2(n)).1.is_none(), "n={n}");
        }
    }

    #[test]
    fn addition_lower_below_upper_when_defined() {
        for k in 2..10 {
            for l2 in [-1.0, 0.0, 0.5, k as f64 - 1.5] {
                if let (lower, Some(upper)) = edge_addition_bounds(k, 4 * k, l2) {
                    assert!(lower < upper, "k={k}, lambda2={l2}");
                }
            }
        }
    }

    #[test]
    fn addition_verified_on_petersen_and_k44() {
        let r = verify_edge_addition(&families::petersen(), 0, 2, DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!((r.lower - 0.225).abs() < 1e-15);
        // lambda2 carries the dense-oracle accuracy, so the derived upper
        // bound is only pinned to ~1e-10.
        assert!((r.upper.unwrap() - 0.4).abs() < 1e-9);
        assert!(r.observed_lo > r.lower && r.observed_hi < r.upper.unwrap());

        let k44 = families::complete_bipartite(4, 4).unwrap();
        let r = verify_edge_addition(&k44, 0, 1, DEFAULT_TOL).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!((r.lower - 0.275).abs() < 1e-12);
        assert!((r.upper.unwrap() - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn addition_upper_inapplicable_on_long_cycles() {
        let r = verify_edge_addition(&families::cycle(10).unwrap(), 0, 2, DEFAULT_TOL).unwrap();
        assert_eq!(r.upper, None);
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn addition_rejections() {
        assert!(matches!(
            verify_edge_addition(&families::star(4).unwrap(), 1, 2, DEFAULT_TOL),
            Err(BoundsError::NotRegular)
        ));
        assert!(matches!(
            verify_edge_addition(&families::petersen(), 0, 1, DEFAULT_TOL),
            Err(BoundsError::Graph(_))
        ));
    }

    #[test]
    fn constant_c_path10() {
        // P_10: gap = 2 - 2 cos(pi/11), c = gap * 10 * 9.
        let r = verify_main_theorem(&families::path(10).unwrap(), DEFAULT_TOL).unwrap();
        let exact = (2.0 - 2.0 * (std::f64::consts::PI / 11.0).cos()) * 90.0;
        assert!(contains(r.c_lo, r.c_hi, exact));
        assert!((exact - 7.2913).abs() < 1e-4);
    }

    #[test]
    fn escalation_reaches_dense_oracle() {
        // A decision function that never decides walks through all levels and
        // ends at the dense enclosure.
        let g = families::path(9).unwrap();
        let (lo, hi) = lambda1_enclosure_escalated(&g, DEFAULT_TOL, |_, _| false).unwrap();
        let exact = 2.0 * (std::f64::consts::PI / 10.0).cos();
        assert!(contains(lo, hi, exact));
        assert!(hi - lo <= 5e-10);
    }
}
