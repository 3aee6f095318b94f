//! Rigorous certification that the two-parameter slack function
//!
//! ```text
//! g(lambda, alpha) = sqrt((1-lambda)*lambda)
//!                  - sqrt((alpha/(c+d*alpha) - lambda)*lambda)
//!                  - sqrt((1/(c+d*alpha) - (1-lambda)/2)*(1-lambda))
//! ```
//!
//! with c = 3/2, d = 3 is nonnegative wherever all three radicands are
//! nonnegative. The three radicand zero-sets bound the feasible region: with
//! mu(alpha) = alpha/(c+d*alpha) and nu(alpha) = 1 - 2/(c+d*alpha), a point
//! is feasible iff 0 <= lambda <= 1, lambda <= mu, lambda >= nu.
//!
//! The certificate is produced by adaptive box bisection with outward-rounded
//! interval arithmetic. Boxes proven infeasible are discarded, boxes with a
//! certified nonnegative enclosure are accepted, and boxes that still
//! straddle zero once they are smaller than the tolerance are reported as
//! touching boxes, provided they sit on the feasible-region boundary (g does
//! reach 0 there, at the corner lambda = 0, alpha = 1/6).
//!
//! Near that corner the three roots nearly cancel: g ~ 0.0042*sqrt(lambda),
//! while a direct interval evaluation has slack ~ sqrt(width), so no amount
//! of splitting certifies a box whose distance from lambda = 0 is comparable
//! to its width. Certification therefore also tries the exact rationalized
//! form: for feasible lambda > 0,
//!
//! ```text
//! g >= 0  <=>  Z := lambda*E + nu*F >= 0, where
//! F = (1-lambda) * ((1+mu-2*lambda)/2 + sqrt((1-lambda)*(mu-lambda)))
//! E = (1-mu)^2 - F
//! ```
//!
//! obtained by two sign-preserving squarings. E stays near 0.0099 at the
//! corner with only O(width) interval slack, so small corner boxes certify.

use super::interval::Interval;
use super::BoundsError;

/// Fixed coefficients of the slack function.
pub const SLACK_C: f64 = 1.5;
pub const SLACK_D: f64 = 3.0;

/// Identifier recorded in certificates for this function.
pub const SLACK_FUNCTION_ID: &str = "book-inequality-slack";

const ALPHA_MIN: f64 = 1.0 / 6.0;
const ALPHA_MAX: f64 = 0.25;
const LAMBDA_MIN: f64 = 0.0;
const LAMBDA_MAX: f64 = 1.0;

/// Hard cap on examined boxes; reaching it aborts to an inconclusive verdict
/// instead of running away.
const BOX_BUDGET: usize = 50_000_000;

/// Outcome of a certification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Every feasible leaf is certified nonnegative or is a touching box on
    /// the feasible boundary.
    NonnegativeCertified,
    /// Some box could not be resolved within the depth budget (or an
    /// enclosure came out entirely negative).
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::NonnegativeCertified => "nonnegative-certified",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// An axis-aligned box in the (lambda, alpha) plane with the g-enclosure
/// computed for it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeafBox {
    pub lambda_lo: f64,
    pub lambda_hi: f64,
    pub alpha_lo: f64,
    pub alpha_hi: f64,
    pub enclosure_lo: f64,
    pub enclosure_hi: f64,
    pub kind: LeafKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeafKind {
    /// Enclosure (or the rationalized side-check) proves g >= 0 on the
    /// feasible part of the box.
    Certified,
    /// Sign undecided, box width at most the tolerance, box meets the
    /// feasible-region boundary.
    Touching,
    /// Sign undecided at the depth budget.
    Unresolved,
}

impl LeafBox {
    pub fn width(&self) -> f64 {
        (self.lambda_hi - self.lambda_lo).max(self.alpha_hi - self.alpha_lo)
    }
}

/// Result of one adaptive bisection run.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalCertificate {
    pub function: &'static str,
    pub c: f64,
    pub d: f64,
    pub lambda_lo: f64,
    pub lambda_hi: f64,
    pub alpha_lo: f64,
    pub alpha_hi: f64,
    pub tolerance: f64,
    pub max_depth: u32,
    pub verdict: Verdict,
    /// Enclosure of the infimum of g over the feasible part of the box.
    pub min_enclosure_lo: f64,
    pub min_enclosure_hi: f64,
    pub touching: Vec<LeafBox>,
    pub boxes_examined: usize,
    pub boxes_infeasible: usize,
    pub leaves_certified: usize,
    pub unresolved: usize,
    pub deepest: u32,
}

impl IntervalCertificate {
    /// Plain-text rendering: one key-value line per field, then one line per
    /// touching box.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("inequality-certificate\n");
        out.push_str("format-version 1\n");
        out.push_str(&format!("function {}\n", self.function));
        out.push_str(&format!("c {}\n", self.c));
        out.push_str(&format!("d {}\n", self.d));
        out.push_str(&format!("lambda-box {} {}\n", self.lambda_lo, self.lambda_hi));
        out.push_str(&format!("alpha-box {} {}\n", self.alpha_lo, self.alpha_hi));
        out.push_str(&format!("tolerance {}\n", self.tolerance));
        out.push_str(&format!("max-depth {}\n", self.max_depth));
        out.push_str(&format!("verdict {}\n", self.verdict));
        out.push_str(&format!(
            "min-enclosure {} {}\n",
            self.min_enclosure_lo, self.min_enclosure_hi
        ));
        out.push_str(&format!("boxes-examined {}\n", self.boxes_examined));
        out.push_str(&format!("boxes-infeasible {}\n", self.boxes_infeasible));
        out.push_str(&format!("leaves-certified {}\n", self.leaves_certified));
        out.push_str(&format!("unresolved-count {}\n", self.unresolved));
        out.push_str(&format!("deepest-box {}\n", self.deepest));
        out.push_str(&format!("touching-count {}\n", self.touching.len()));
        for t in &self.touching {
            out.push_str(&format!(
                "touching {} {} {} {} {} {}\n",
                t.lambda_lo, t.lambda_hi, t.alpha_lo, t.alpha_hi, t.enclosure_lo, t.enclosure_hi
            ));
        }
        out
    }
}

fn den_iv(alpha: Interval) -> Interval {
    Interval::point(SLACK_C).add(Interval::point(SLACK_D).mul(alpha))
}

fn mu_iv(alpha: Interval) -> Interval {
    alpha.div(den_iv(alpha))
}

fn nu_iv(alpha: Interval) -> Interval {
    Interval::point(1.0).sub(Interval::point(2.0).div(den_iv(alpha)))
}

/// Point evaluation of the slack function. Radicands within 1e-12 of zero
/// are treated as zero (the feasible boundary is not exactly representable);
/// returns None when a radicand is genuinely negative.
pub fn inequality_slack(lambda: f64, alpha: f64) -> Option<f64> {
    if !lambda.is_finite() || !alpha.is_finite() {
        return None;
    }
    let den = SLACK_C + SLACK_D * alpha;
    let mu = alpha / den;
    let nu = 1.0 - 2.0 / den;
    let r1 = (1.0 - lambda) * lambda;
    let r2 = (mu - lambda) * lambda;
    let r3 = (lambda - nu) * (1.0 - lambda) / 2.0;
    let clamp = |r: f64| -> Option<f64> {
        if r >= 0.0 {
            Some(r)
        } else if r > -1e-12 {
            Some(0.0)
        } else {
            None
        }
    };
    Some(clamp(r1)?.sqrt() - clamp(r2)?.sqrt() - clamp(r3)?.sqrt())
}

#[derive(Debug, Clone, Copy)]
struct BoxTask {
    l_lo: f64,
    l_hi: f64,
    a_lo: f64,
    a_hi: f64,
    depth: u32,
}

impl BoxTask {
    fn width(&self) -> f64 {
        (self.l_hi - self.l_lo).max(self.a_hi - self.a_lo)
    }

    /// True when the box meets the feasible-region boundary: the lines
    /// lambda = 0 / lambda = 1 or one of the curves lambda = mu(alpha),
    /// lambda = nu(alpha). Both curves are increasing in alpha, so endpoint
    /// enclosures decide intersection conservatively (never a false
    /// negative).
    fn on_boundary(&self) -> bool {
        if self.l_lo <= LAMBDA_MIN || self.l_hi >= LAMBDA_MAX {
            return true;
        }
        let mu_left = mu_iv(Interval::point(self.a_lo));
        let mu_right = mu_iv(Interval::point(self.a_hi));
        if mu_left.lo() <= self.l_hi && mu_right.hi() >= self.l_lo {
            return true;
        }
        let nu_left = nu_iv(Interval::point(self.a_lo));
        let nu_right = nu_iv(Interval::point(self.a_hi));
        nu_left.lo() <= self.l_hi && nu_right.hi() >= self.l_lo
    }
}

enum BoxEval {
    /// Some radicand is entirely negative: no feasible points inside.
    Infeasible,
    /// A radicand straddles zero but the box is not on the boundary; the
    /// enclosure would be contaminated by infeasible points, so split.
    NeedsSplit,
    /// The enclosure itself proves g >= 0; it is sharp enough to keep.
    CertifiedDirect { g: Interval },
    /// Only the rationalized form proves g >= 0; the direct enclosure still
    /// straddles zero, so the box is worth refining for enclosure quality.
    CertifiedRationalized { g: Interval },
    /// Sign undecided.
    Undecided { g: Interval },
}

fn evaluate(task: &BoxTask) -> BoxEval {
    let lambda = Interval::new(task.l_lo, task.l_hi);
    let alpha = Interval::new(task.a_lo, task.a_hi);
    let mu = mu_iv(alpha);
    let nu = nu_iv(alpha);
    let one_minus = Interval::point(1.0).sub(lambda);

    let r1 = one_minus.mul(lambda);
    let mu_minus_l = mu.sub(lambda);
    let r2 = mu_minus_l.mul(lambda);
    let l_minus_nu = lambda.sub(nu);
    let r3 = l_minus_nu.mul(one_minus).half();

    if r1.is_negative() || r2.is_negative() || r3.is_negative() {
        return BoxEval::Infeasible;
    }
    let straddles = !r1.is_nonnegative() || !r2.is_nonnegative() || !r3.is_nonnegative();
    if straddles && !task.on_boundary() {
        return BoxEval::NeedsSplit;
    }

    // Restricting each radicand to [0, inf) is exact on the feasible subset.
    let g = r1
        .clamp_nonnegative()
        .sqrt()
        .sub(r2.clamp_nonnegative().sqrt())
        .sub(r3.clamp_nonnegative().sqrt());
    if g.is_nonnegative() {
        return BoxEval::CertifiedDirect { g };
    }

    // Rationalized positivity check, immune to the corner cancellation.
    let root = one_minus
        .mul(mu_minus_l.clamp_nonnegative())
        .clamp_nonnegative()
        .sqrt();
    let one_plus_mu = Interval::point(1.0).add(mu);
    let k = one_plus_mu.sub(lambda).sub(lambda).half().add(root);
    let f = one_minus.mul(k);
    let one_minus_mu = Interval::point(1.0).sub(mu);
    let e = one_minus_mu.mul(one_minus_mu).sub(f);
    let z = lambda.mul(e).add(nu.mul(f));
    if z.is_nonnegative() {
        let lo = g.lo().max(0.0);
        let hi = g.hi().max(lo);
        return BoxEval::CertifiedRationalized {
            g: Interval::new(lo, hi),
        };
    }

    BoxEval::Undecided { g }
}

fn validate(alpha_lo: f64, alpha_hi: f64, tolerance: f64) -> Result<(), BoundsError> {
    if !tolerance.is_finite() || tolerance <= 0.0 {
        return Err(BoundsError::BadTolerance(tolerance));
    }
    if !alpha_lo.is_finite()
        || !alpha_hi.is_finite()
        || alpha_lo > alpha_hi
        || alpha_lo < ALPHA_MIN
        || alpha_hi > ALPHA_MAX
    {
        return Err(BoundsError::BadAlphaBox {
            lo: alpha_lo,
            hi: alpha_hi,
        });
    }
    Ok(())
}

fn run(
    alpha_lo: f64,
    alpha_hi: f64,
    tolerance: f64,
    max_depth: u32,
    mut leaves: Option<&mut Vec<LeafBox>>,
) -> Result<IntervalCertificate, BoundsError> {
    validate(alpha_lo, alpha_hi, tolerance)?;

    let mut stack = vec![BoxTask {
        l_lo: LAMBDA_MIN,
        l_hi: LAMBDA_MAX,
        a_lo: alpha_lo,
        a_hi: alpha_hi,
        depth: 0,
    }];
    let mut touching: Vec<LeafBox> = Vec::new();
    let mut boxes_examined = 0_usize;
    let mut boxes_infeasible = 0_usize;
    let mut leaves_certified = 0_usize;
    let mut unresolved = 0_usize;
    let mut deepest = 0_u32;
    let mut negative_box = false;
    let mut enc_lo = f64::INFINITY;
    let mut enc_hi = f64::INFINITY;

    let mut record_leaf = |leaves: &mut Option<&mut Vec<LeafBox>>, leaf: LeafBox| {
        if let Some(sink) = leaves.as_deref_mut() {
            sink.push(leaf);
        }
    };

    while let Some(task) = stack.pop() {
        boxes_examined += 1;
        deepest = deepest.max(task.depth);
        if boxes_examined > BOX_BUDGET {
            unresolved += 1 + stack.len();
            break;
        }

        let split = |stack: &mut Vec<BoxTask>, task: &BoxTask| {
            let child = task.depth + 1;
            if task.l_hi - task.l_lo >= task.a_hi - task.a_lo {
                let mid = 0.5 * (task.l_lo + task.l_hi);
                stack.push(BoxTask { l_hi: mid, depth: child, ..*task });
                stack.push(BoxTask { l_lo: mid, depth: child, ..*task });
            } else {
                let mid = 0.5 * (task.a_lo + task.a_hi);
                stack.push(BoxTask { a_hi: mid, depth: child, ..*task });
                stack.push(BoxTask { a_lo: mid, depth: child, ..*task });
            }
        };

        let certified_leaf =
            |g: Interval, leaves: &mut Option<&mut Vec<LeafBox>>, enc: &mut (f64, f64)| {
                enc.0 = enc.0.min(g.lo());
                enc.1 = enc.1.min(g.hi());
                if let Some(sink) = leaves.as_deref_mut() {
                    sink.push(LeafBox {
                        lambda_lo: task.l_lo,
                        lambda_hi: task.l_hi,
                        alpha_lo: task.a_lo,
                        alpha_hi: task.a_hi,
                        enclosure_lo: g.lo(),
                        enclosure_hi: g.hi(),
                        kind: LeafKind::Certified,
                    });
                }
            };
        let mut enc = (enc_lo, enc_hi);

        match evaluate(&task) {
            BoxEval::Infeasible => {
                boxes_infeasible += 1;
            }
            BoxEval::NeedsSplit => {
                if task.depth >= max_depth {
                    unresolved += 1;
                } else {
                    split(&mut stack, &task);
                }
            }
            BoxEval::CertifiedDirect { g } => {
                leaves_certified += 1;
                certified_leaf(g, &mut leaves, &mut enc);
            }
            BoxEval::CertifiedRationalized { g } => {
                // Positivity is settled, but refining until the box is small
                // keeps the reported minimum enclosure sharp.
                if task.width() <= tolerance || task.depth >= max_depth {
                    leaves_certified += 1;
                    certified_leaf(g, &mut leaves, &mut enc);
                } else {
                    split(&mut stack, &task);
                }
            }
            BoxEval::Undecided { g } => {
                if g.is_negative() {
                    // A certified counterexample would live here: the
                    // enclosure over the feasible subset is entirely
                    // negative.
                    negative_box = true;
                    enc.0 = enc.0.min(g.lo());
                    enc.1 = enc.1.min(g.hi());
                } else if task.width() <= tolerance && task.on_boundary() {
                    enc.0 = enc.0.min(g.lo());
                    enc.1 = enc.1.min(g.hi());
                    let leaf = LeafBox {
                        lambda_lo: task.l_lo,
                        lambda_hi: task.l_hi,
                        alpha_lo: task.a_lo,
                        alpha_hi: task.a_hi,
                        enclosure_lo: g.lo(),
                        enclosure_hi: g.hi(),
                        kind: LeafKind::Touching,
                    };
                    touching.push(leaf);
                    record_leaf(&mut leaves, leaf);
                } else if task.depth >= max_depth {
                    unresolved += 1;
                    enc.0 = enc.0.min(g.lo());
                    enc.1 = enc.1.min(g.hi());
                    record_leaf(
                        &mut leaves,
                        LeafBox {
                            lambda_lo: task.l_lo,
                            lambda_hi: task.l_hi,
                            alpha_lo: task.a_lo,
                            alpha_hi: task.a_hi,
                            enclosure_lo: g.lo(),
                            enclosure_hi: g.hi(),
                            kind: LeafKind::Unresolved,
                        },
                    );
                } else {
                    split(&mut stack, &task);
                }
            }
        }
        enc_lo = enc.0;
        enc_hi = enc.1;
    }

    let verdict = if unresolved == 0 && !negative_box {
        Verdict::NonnegativeCertified
    } else {
        Verdict::Inconclusive
    };
    Ok(IntervalCertificate {
        function: SLACK_FUNCTION_ID,
        c: SLACK_C,
        d: SLACK_D,
        lambda_lo: LAMBDA_MIN,
        lambda_hi: LAMBDA_MAX,
        alpha_lo,
        alpha_hi,
        tolerance,
        max_depth,
        verdict,
        min_enclosure_lo: enc_lo,
        min_enclosure_hi: enc_hi,
        touching,
        boxes_examined,
        boxes_infeasible,
        leaves_certified,
        unresolved,
        deepest,
    })
}

/// Certifies g >= 0 on the feasible region over `[alpha_lo, alpha_hi]`.
pub fn certify_no_solution(
    alpha_lo: f64,
    alpha_hi: f64,
    tolerance: f64,
    max_depth: u32,
) -> Result<IntervalCertificate, BoundsError> {
    run(alpha_lo, alpha_hi, tolerance, max_depth, None)
}

/// Same as [`certify_no_solution`] but also returns every retained leaf box,
/// for enclosure-soundness checks.
pub fn certify_no_solution_with_leaves(
    alpha_lo: f64,
    alpha_hi: f64,
    tolerance: f64,
    max_depth: u32,
) -> Result<(IntervalCertificate, Vec<LeafBox>), BoundsError> {
    let mut leaves = Vec::new();
    let cert = run(alpha_lo, alpha_hi, tolerance, max_depth, Some(&mut leaves))?;
    Ok((cert, leaves))
}
