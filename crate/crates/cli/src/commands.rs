use chpi_core::approximants::{ch_approx, evaluate, ratio_limit, sinc_error_constant, ApproximantId};
use chpi_core::error_metrics::report;
use chpi_core::series_brackets::{certify_theorem, BoundCheck};
use chpi_core::{reference_pi, Error, PrecisionContext, Real};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::RunConfig;
use crate::emit::Table;
use crate::CliError;

const OUTSIDE: &str = "outside theorem hypothesis";

/// A rendered-ready table and whether every check in it passed.
pub struct CommandOutput {
    pub table: Table,
    pub success: bool,
}

fn fmt(v: &Real, digits: usize) -> String {
    v.to_scientific(digits)
}

fn flag(b: bool) -> String {
    b.to_string()
}

pub fn run_table(cfg: &RunConfig, ctx: &PrecisionContext) -> Result<CommandOutput, CliError> {
    let d = cfg.digits();
    let mut t = Table::new(vec![
        "n",
        "value",
        "abs_error",
        "rel_error",
        "precision",
        "sig_digits",
        "digits_estimate",
        "lower_bound",
        "upper_bound",
        "in_bounds",
    ]);
    let mut success = true;
    for n in cfg.side_counts() {
        let value = ch_approx(n, ctx)?;
        let inside = n >= 32;
        let r = report(&value, inside.then_some(n), ctx)?;
        let mut row = vec![
            n.to_string(),
            fmt(&value, d),
            fmt(&r.abs_error, d),
            fmt(&r.rel_error, d),
            r.precision.to_string(),
            r.sig_digits.to_string(),
        ];
        if inside {
            let check = &certify_theorem(&[n], ctx)?[0];
            success &= check.passed;
            row.extend([
                r.digits_estimate.as_ref().map(|e| e.to_scientific(4)).unwrap_or_default(),
                fmt(&check.lower_bound, d),
                fmt(&check.upper_bound, d),
                flag(check.passed),
            ]);
        } else {
            row.extend([String::new(), String::new(), String::new(), OUTSIDE.to_string()]);
        }
        t.push(row);
    }
    Ok(CommandOutput { table: t, success })
}

/// The doubling grid from `n_min` plus `grid_points` random odd side counts
/// from the same range, sorted and deduplicated.
pub fn certify_side_counts(cfg: &RunConfig) -> Vec<u64> {
    let mut doubling = cfg.clone();
    doubling.doubling = true;
    let mut ns = doubling.side_counts();
    let lo = cfg.n_min | 1;
    if lo <= cfg.n_max {
        let odd_count = (cfg.n_max - lo) / 2 + 1;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        ns.extend((0..cfg.grid_points).map(|_| lo + 2 * rng.gen_range(0..odd_count)));
    }
    ns.sort_unstable();
    ns.dedup();
    ns
}

pub fn run_certify(cfg: &RunConfig, ctx: &PrecisionContext) -> Result<CommandOutput, CliError> {
    if cfg.n_min < 32 && cfg.n_min <= cfg.n_max {
        return Err(Error::TheoremHypothesis(cfg.n_min).into());
    }
    let d = cfg.digits();
    let checks: Vec<BoundCheck> = certify_theorem(&certify_side_counts(cfg), ctx)?;
    let mut t = Table::new(vec![
        "n",
        "rel_error",
        "lower_bound",
        "upper_bound",
        "margin_lower",
        "margin_upper",
        "passed",
    ]);
    for c in &checks {
        t.push(vec![
            c.n.to_string(),
            fmt(&c.rel_error, d),
            fmt(&c.lower_bound, d),
            fmt(&c.upper_bound, d),
            fmt(&c.margin_lower, d),
            fmt(&c.margin_upper, d),
            flag(c.passed),
        ]);
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    t.footer.push(format!("certified {passed} of {} side counts", checks.len()));
    Ok(CommandOutput {
        table: t,
        success: passed == checks.len(),
    })
}

const COMPARED: [ApproximantId; 5] = [
    ApproximantId::Ch,
    ApproximantId::SnellHuygens,
    ApproximantId::Heron,
    ApproximantId::Cf2,
    ApproximantId::Cf3,
];

/// `|CH − π| / |CF2 − π|` at `n`.
pub fn newton_ratio(n: u64, ctx: &PrecisionContext) -> Result<Real, CliError> {
    let g = ctx.guarded();
    let pi = reference_pi(&g)?;
    let ch = evaluate(ApproximantId::Ch, n, ctx)?.sub(&pi, &g)?;
    let newton = evaluate(ApproximantId::Cf2, n, ctx)?.sub(&pi, &g)?;
    Ok(ch.abs().div(&newton.abs(), &g)?.round_to(ctx)?)
}

fn ratio_deviation(n: u64, ctx: &PrecisionContext) -> Result<Option<Real>, CliError> {
    match ratio_limit(n, ctx) {
        Ok(r) => Ok(Some(r.sub(&Real::ratio(3, 8, ctx)?, ctx)?.abs())),
        Err(Error::RatioIndeterminate) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

pub fn run_compare(cfg: &RunConfig, ctx: &PrecisionContext) -> Result<CommandOutput, CliError> {
    let d = cfg.digits();
    let g = ctx.guarded();
    let pi = reference_pi(&g)?;
    let mut header = vec!["n"];
    header.extend(COMPARED.iter().map(|id| id.tag()));
    header.push("ratio_limit");
    let mut t = Table::new(header);
    let mut deviations = Vec::new();
    for n in cfg.side_counts() {
        let mut row = vec![n.to_string()];
        for id in COMPARED {
            let err = evaluate(id, n, ctx)?.sub(&pi, &g)?.round_to(ctx)?;
            row.push(fmt(&err, d));
        }
        match ratio_limit(n, ctx) {
            Ok(r) => row.push(fmt(&r, d)),
            Err(Error::RatioIndeterminate) => row.push("indeterminate".into()),
            Err(e) => return Err(e.into()),
        }
        if n >= 32 {
            deviations.extend(ratio_deviation(n, ctx)?);
        }
        t.push(row);
    }

    let mut success = true;
    if cfg.n_max >= 32 && !t.rows.is_empty() {
        let n = cfg.n_max;
        let nr = newton_ratio(n, ctx)?;
        let nr_ok = nr > Real::ratio(198, 10, ctx)? && nr < Real::ratio(202, 10, ctx)?;
        t.footer.push(format!(
            "ch_newton_ratio(n={n}) = {} (expected 20, window [19.8, 20.2]): {}",
            nr.to_scientific(8),
            if nr_ok { "ok" } else { "FAIL" }
        ));
        let rl = match ratio_limit(n, ctx) {
            Ok(r) => r.to_scientific(8),
            Err(Error::RatioIndeterminate) => "indeterminate".into(),
            Err(e) => return Err(e.into()),
        };
        t.footer.push(format!("ratio_limit(n={n}) = {rl} (limit 3/8)"));
        let decreasing = deviations.windows(2).all(|w| w[1] < w[0]);
        t.footer.push(format!(
            "|ratio_limit - 3/8| decreasing over rows with n >= 32: {}",
            if decreasing { "yes" } else { "no" }
        ));
        success = nr_ok && decreasing;
    }
    Ok(CommandOutput { table: t, success })
}

/// Printed leading constants of `sin x / x` approximants: order, denominator
/// and the expected sign of `approx − sin x / x`.
pub fn printed_constant(id: ApproximantId) -> Option<(u32, u64, i8)> {
    match id {
        ApproximantId::Cf1 => Some((4, 180, 1)),
        ApproximantId::Cf2 => Some((6, 2100, 1)),
        ApproximantId::Cf3 => Some((8, 44_100, 1)),
        ApproximantId::ChRational => Some((6, 105, -1)),
        _ => None,
    }
}

pub fn run_convergents(cfg: &RunConfig, ctx: &PrecisionContext) -> Result<CommandOutput, CliError> {
    let d = cfg.digits();
    let mut t = Table::new(vec![
        "id",
        "order",
        "estimate",
        "printed_constant",
        "rel_deviation",
        "sign_ok",
        "passed",
    ]);
    let tol = Real::ratio(1, 10_000, ctx)?;
    let mut success = true;
    for id in ApproximantId::SINC {
        let (order, den, sign) = printed_constant(id).expect("sinc ids have printed constants");
        let est = sinc_error_constant(id, ctx)?;
        let magnitude = Real::ratio(1, den as i64, ctx)?;
        let dev = est.constant.abs().sub(&magnitude, ctx)?.abs().mul_u64(den, ctx)?;
        let sign_ok = if sign > 0 { est.constant.is_positive() } else { est.constant.is_negative() };
        let passed = est.order == order && sign_ok && dev < tol;
        success &= passed;
        let printed = if id == ApproximantId::ChRational {
            format!("+-1/{den}")
        } else {
            format!("-1/{den}")
        };
        t.push(vec![
            id.tag().to_string(),
            est.order.to_string(),
            fmt(&est.constant, d),
            printed,
            dev.to_scientific(4),
            flag(sign_ok),
            flag(passed),
        ]);
    }
    Ok(CommandOutput { table: t, success })
}
