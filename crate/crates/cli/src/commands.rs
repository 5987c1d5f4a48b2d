use std::path::PathBuf;

use anyhow::Result;
use ddl::analytic::{self, linspace};
use ddl::empirical::{self, parse_rational, EquidistMode, ThresholdGrid, WeightedCdfEstimate};
use ddl::inversion::{self, CdfSamples, EMPIRICAL_BUDGET};
use ddl::sieve::{FoldOptions, SigmaTable, CACHE_DIR_ENV};
use ddl::{Complex64, Error, MultFunc, Ratio};
use serde_json::{json, Value};

use crate::args::Format;
use crate::args::{AnalyticOp, ClassMode, Command, FuncArgs, Mode, RunFlags};
use crate::output::{sig12, Plot, Report, Table};

pub fn build_func(a: &FuncArgs) -> Result<MultFunc, Error> {
    let mut f: MultFunc = a.f.parse()?;
    if let Some(k) = a.twist {
        f = f.sigma_power_twist(k);
    }
    if let Some(y) = a.coprime_y {
        f = f.restrict_coprime(y, a.sigma_weight)?;
    }
    Ok(f)
}

fn ratio(name: &str, s: &str) -> Result<Ratio<u64>, Error> {
    let r = parse_rational(s).map_err(|e| Error::param(name, e.to_string()))?;
    if r > Ratio::from_integer(1) {
        return Err(Error::param(name, format!("{r} exceeds 1")));
    }
    Ok(r)
}

fn complex(v: Complex64) -> Value {
    json!({ "re": v.re, "im": v.im })
}

fn fold_opts(run: &RunFlags) -> Result<FoldOptions, Error> {
    if run.segment_size == 0 {
        return Err(Error::param("segment-size", "must be positive"));
    }
    if run.workers == Some(0) {
        return Err(Error::param("workers", "must be positive"));
    }
    Ok(FoldOptions { segment_size: run.segment_size, workers: run.workers })
}

/// Real grid for `psi`/`invert`: `linspace:a,b,n` or `list:...`.
pub fn parse_reals(name: &str, s: &str) -> Result<Vec<f64>, Error> {
    let bad = |why: String| Error::param(name, why);
    if let Some(body) = s.strip_prefix("linspace:") {
        let parts: Vec<&str> = body.split(',').collect();
        if parts.len() != 3 {
            return Err(bad("linspace needs a,b,n".into()));
        }
        let a: f64 = parts[0].trim().parse().map_err(|_| bad(format!("bad start `{}`", parts[0])))?;
        let b: f64 = parts[1].trim().parse().map_err(|_| bad(format!("bad end `{}`", parts[1])))?;
        let n: usize = parts[2].trim().parse().map_err(|_| bad(format!("bad count `{}`", parts[2])))?;
        if n == 0 || !a.is_finite() || !b.is_finite() {
            return Err(bad("empty or non-finite linspace".into()));
        }
        return Ok(linspace(a, b, n));
    }
    let body = s.strip_prefix("list:").unwrap_or(s);
    body.split(',').map(|v| v.trim().parse::<f64>().map_err(|_| bad(format!("`{v}` is not a number")))).collect()
}

/// Evaluation points for `invert`: as [`parse_reals`], or `grid:<spec>` for
/// `log u` over the positive thresholds of a grid.
fn parse_points(s: &str) -> Result<Vec<f64>, Error> {
    match s.strip_prefix("grid:") {
        Some(g) => {
            let grid: ThresholdGrid = g.parse()?;
            Ok(grid
                .points()
                .iter()
                .filter(|u| *u.numer() > 0)
                .map(|u| (*u.numer() as f64 / *u.denom() as f64).ln())
                .collect())
        }
        None => parse_reals("points", s),
    }
}

fn check_quadrature(t: f64, step: f64) -> Result<usize, Error> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::param("T", "must be positive"));
    }
    if !(step > 0.0 && step <= t) {
        return Err(Error::param("step", "must lie in (0, T]"));
    }
    let n = (t / step).round();
    if (n * step - t).abs() > 1e-9 * t {
        return Err(Error::param("step", "T must be a multiple of the step"));
    }
    if n > 1e7 {
        return Err(Error::param("step", "more than 10^7 quadrature nodes"));
    }
    Ok(n as usize + 1)
}

fn cache_dir(explicit: Option<&PathBuf>) -> Option<PathBuf> {
    explicit.cloned().or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
}

fn estimate_report(e: &WeightedCdfEstimate<f64>, head: Value, title: String) -> Report {
    let mut table = Table::new(vec!["u_num", "u_den", "raw_re", "raw_im", "value_re", "value_im"]);
    let mut rows = Vec::new();
    for (k, u) in e.grid.points().iter().enumerate() {
        table.push(vec![
            u.numer().to_string(),
            u.denom().to_string(),
            sig12(e.raw[k].re),
            sig12(e.raw[k].im),
            sig12(e.values[k].re),
            sig12(e.values[k].im),
        ]);
        rows.push(json!({
            "u_num": u.numer(),
            "u_den": u.denom(),
            "count": e.counts[k],
            "raw": complex(e.raw[k]),
            "value": complex(e.values[k]),
        }));
    }
    let mut payload = head;
    payload["normalization"] = json!(format!("{:?}", e.normalization).to_lowercase());
    payload["normalizer"] = json!(e.normalizer);
    payload["total"] = complex(e.total);
    payload["rows"] = Value::Array(rows);
    let plot = Plot { using: "($1/$2):5".into(), xlabel: "u", ylabel: "value_re", title };
    Report { payload, table, default_format: Format::Csv, plot: Some(plot) }
}

fn scalar_report(payload: Value, cols: Vec<(&'static str, String)>) -> Report {
    let mut table = Table::new(cols.iter().map(|c| c.0).collect());
    table.push(cols.into_iter().map(|c| c.1).collect());
    Report { payload, table, default_format: Format::Json, plot: None }
}

pub fn run(cmd: &Command, flags: &RunFlags) -> Result<Report> {
    let opts = fold_opts(flags)?;
    Ok(match cmd {
        Command::Catalog => {
            let mut table =
                Table::new(vec!["id", "descriptor", "value_class", "nonnegative", "kappa", "mean_value_hypotheses"]);
            let mut items = Vec::new();
            for f in MultFunc::catalog() {
                let hyp = f.tail_model().factor.is_some();
                let kappa = f.claimed_kappa();
                table.push(vec![
                    f.id().to_string(),
                    format!("\"{f}\""),
                    f.value_class().as_str().to_string(),
                    f.is_nonnegative().to_string(),
                    kappa.map_or(String::new(), |k| k.to_string()),
                    hyp.to_string(),
                ]);
                items.push(json!({
                    "id": f.id(),
                    "descriptor": f.to_string(),
                    "value_class": f.value_class().as_str(),
                    "nonnegative": f.is_nonnegative(),
                    "kappa": kappa,
                    "mean_value_hypotheses": hyp,
                }));
            }
            Report { payload: Value::Array(items), table, default_format: Format::Json, plot: None }
        }

        Command::SieveCache { x, dir } => {
            let dir = cache_dir(dir.as_ref())
                .ok_or_else(|| Error::param("dir", format!("pass --dir or set {CACHE_DIR_ENV}")))?;
            let path = dir.join(ddl::sieve::cache_file_name(1, *x));
            let reused = path.exists();
            let table = SigmaTable::load_or_build(*x, flags.segment_size, Some(&dir))?;
            let last = table.get(*x);
            scalar_report(
                json!({ "path": path, "x": x, "reused": reused, "sigma_at_x": last }),
                vec![
                    ("path", path.display().to_string()),
                    ("x", x.to_string()),
                    ("reused", reused.to_string()),
                    ("sigma_at_x", last.to_string()),
                ],
            )
        }

        Command::Estimate { func, x, mode, grid, .. } => {
            let f = build_func(func)?;
            let grid: ThresholdGrid = grid.parse()?;
            let e = match mode {
                Mode::Df => empirical::estimate_df::<f64>(&f, *x, &grid, &opts)?,
                Mode::Dtilde => empirical::estimate_dtilde::<f64>(&f, *x, &grid, &opts)?,
            };
            let head = json!({ "f": f.to_string(), "x": x, "mode": mode });
            estimate_report(&e, head, format!("{f}, x = {x}"))
        }

        Command::Lattice { r, grid, .. } => {
            let grid: ThresholdGrid = grid.parse()?;
            let table = SigmaTable::load_or_build(*r, flags.segment_size, cache_dir(None).as_deref())?;
            let e = empirical::lattice_two_squares::<f64>(*r, &grid, &table)?;
            estimate_report(&e, json!({ "R": r }), format!("lattice, R = {r}"))
        }

        Command::Equidist { mode, q, u, x } => {
            let u = ratio("u", u)?;
            let m = match mode {
                ClassMode::Omega => EquidistMode::OmegaModQ,
                ClassMode::Coprime => EquidistMode::CoprimeClasses,
            };
            let t = empirical::equidist_tally(m, *q, u, *x, &opts)?;
            let dens = t.densities::<f64>();
            let mut table = Table::new(vec!["class", "count", "density"]);
            let mut classes = Vec::new();
            for c in t.active_classes() {
                let i = c as usize;
                table.push(vec![c.to_string(), t.counts[i].to_string(), sig12(dens[i])]);
                classes.push(json!({ "class": c, "count": t.counts[i], "density": dens[i] }));
            }
            let payload = json!({
                "mode": mode,
                "q": q,
                "u_num": u.numer(),
                "u_den": u.denom(),
                "x": x,
                "classes": classes,
                "class_sum": t.class_sum(),
                "qualifying": t.qualifying,
                "qualifying_coprime": t.qualifying_coprime,
                "qualifying_density": t.qualifying as f64 / *x as f64,
            });
            Report { payload, table, default_format: Format::Json, plot: None }
        }

        Command::Smoothed { func, x, u, m } => {
            let f = build_func(func)?;
            let u = ratio("u", u)?;
            let s = empirical::smoothed_estimate::<f64>(&f, *x, u, *m, &opts)?;
            scalar_report(
                json!({
                    "f": f.to_string(), "x": x, "u_num": u.numer(), "u_den": u.denom(), "m": m,
                    "value": complex(s.value),
                    "sharp_at_u": complex(s.sharp_lower),
                    "sharp_at_u_plus_1_over_m": complex(s.sharp_upper),
                }),
                vec![
                    ("value_re", sig12(s.value.re)),
                    ("value_im", sig12(s.value.im)),
                    ("sharp_lower_re", sig12(s.sharp_lower.re)),
                    ("sharp_upper_re", sig12(s.sharp_upper.re)),
                ],
            )
        }

        Command::PsumCheck { func, x, u } => {
            let f = build_func(func)?;
            let u = ratio("u", u)?;
            let c = empirical::partial_summation_check::<f64>(&f, *x, u, &opts)?;
            scalar_report(
                json!({
                    "f": f.to_string(), "x": x, "u_num": u.numer(), "u_den": u.denom(),
                    "lhs": complex(c.lhs), "rhs": complex(c.rhs), "difference": (c.lhs - c.rhs).norm(),
                }),
                vec![
                    ("lhs_re", sig12(c.lhs.re)),
                    ("lhs_im", sig12(c.lhs.im)),
                    ("rhs_re", sig12(c.rhs.re)),
                    ("rhs_im", sig12(c.rhs.im)),
                ],
            )
        }

        Command::Analytic { op } => analytic_op(op)?,

        Command::Invert { func, p, t, step, points, j, .. } => {
            let f = build_func(func)?;
            let nodes = check_quadrature(*t, *step)?;
            let pts = parse_points(points)?;
            let ts = linspace(0.0, *t, nodes);
            let prof = analytic::psi(&f, &ts, *p, *j)?;
            let inv = inversion::invert(&prof, &pts, *t, *step)?;
            let mut table = Table::new(vec!["x", "u", "raw", "value"]);
            let mut rows = Vec::new();
            for k in 0..pts.len() {
                table.push(vec![sig12(pts[k]), sig12(pts[k].exp()), sig12(inv.raw[k]), sig12(inv.values[k])]);
                rows.push(json!({ "x": pts[k], "u": pts[k].exp(), "raw": inv.raw[k], "value": inv.values[k] }));
            }
            let payload = json!({
                "f": f.to_string(),
                "P": p,
                "T": t,
                "step": step,
                "J": j,
                "slack": inv.slack,
                "within_slack": inv.within_slack,
                "max_violation": inv.max_violation,
                "isotonic_adjusted": inv.isotonic_adjusted,
                "imag_residue": inv.imag_residue,
                "mean_log": prof.mean_log,
                "note": "T is a calibrated cutoff, not derived from a decay rate of psi",
                "rows": rows,
            });
            Report {
                payload,
                table,
                default_format: Format::Csv,
                plot: Some(Plot { using: "1:4".into(), xlabel: "log u", ylabel: "F", title: format!("inverted {f}") }),
            }
        }

        Command::Compare { func, x, p, t, step, grid, j } => {
            let f = build_func(func)?;
            let nodes = check_quadrature(*t, *step)?;
            let grid: ThresholdGrid = grid.parse()?;
            let e = empirical::estimate_dtilde::<f64>(&f, *x, &grid, &opts)?;
            let a = CdfSamples::from_estimate(&e, EMPIRICAL_BUDGET);
            let prof = analytic::psi(&f, &linspace(0.0, *t, nodes), *p, *j)?;
            let inv = inversion::invert(&prof, &a.points, *t, *step)?;
            let d = inversion::sup_distance(&a, &CdfSamples::from_inverted(&inv))?;
            scalar_report(
                json!({
                    "f": f.to_string(), "x": x, "P": p, "T": t, "step": step,
                    "sup_distance": d.value,
                    "at_u": d.at.exp(),
                    "compared_points": d.compared,
                    "budgets": { "empirical": d.budget_a, "inverted": d.budget_b },
                    "imag_residue": inv.imag_residue,
                }),
                vec![
                    ("sup_distance", sig12(d.value)),
                    ("at_u", sig12(d.at.exp())),
                    ("budget_empirical", sig12(d.budget_a)),
                    ("budget_inverted", sig12(d.budget_b)),
                ],
            )
        }
    })
}

fn analytic_op(op: &AnalyticOp) -> Result<Report> {
    Ok(match op {
        AnalyticOp::Mean { func, p } => {
            let f = build_func(func)?;
            let v = analytic::mean_value_product::<f64>(&f, *p)?;
            scalar_report(
                json!({ "f": f.to_string(), "value": complex(v.value), "P": v.p_bound, "tail_bound": v.tail_bound }),
                vec![
                    ("value_re", sig12(v.value.re)),
                    ("value_im", sig12(v.value.im)),
                    ("P", v.p_bound.to_string()),
                    ("tail_bound", sig12(v.tail_bound)),
                ],
            )
        }
        AnalyticOp::Wirsing { func, x, p } => {
            let f = build_func(func)?;
            let p = p.unwrap_or(*x);
            let v = analytic::wirsing_prediction::<f64>(&f, *x as f64, p)?;
            scalar_report(
                json!({ "f": f.to_string(), "x": x, "P": p, "kappa": f.claimed_kappa(), "value": v }),
                vec![("value", sig12(v)), ("x", x.to_string()), ("P", p.to_string())],
            )
        }
        AnalyticOp::Psi { func, t, p, j, .. } => {
            let f = build_func(func)?;
            let ts = parse_reals("t", t)?;
            let prof = analytic::psi(&f, &ts, *p, *j)?;
            let mut table = Table::new(vec!["t", "psi_re", "psi_im", "tail_bound"]);
            let mut rows = Vec::new();
            for k in 0..ts.len() {
                table.push(vec![sig12(ts[k]), sig12(prof.psi[k].re), sig12(prof.psi[k].im), sig12(prof.tail_bound[k])]);
                rows.push(json!({ "t": ts[k], "psi": complex(prof.psi[k]), "tail_bound": prof.tail_bound[k] }));
            }
            let payload = json!({ "f": f.to_string(), "P": p, "J": j, "mean_log": prof.mean_log, "rows": rows });
            Report {
                payload,
                table,
                default_format: Format::Json,
                plot: Some(Plot { using: "1:2".into(), xlabel: "t", ylabel: "psi_re", title: format!("psi {f}") }),
            }
        }
        AnalyticOp::Kappa { func, x } => {
            let f = build_func(func)?;
            let k = analytic::mertens_kappa::<f64>(&f, *x)?;
            scalar_report(
                json!({
                    "f": f.to_string(), "x": x, "claimed_kappa": f.claimed_kappa(),
                    "log_ratio": complex(k.log_ratio), "reciprocal_sum": complex(k.reciprocal_sum),
                }),
                vec![("log_ratio_re", sig12(k.log_ratio.re)), ("reciprocal_sum_re", sig12(k.reciprocal_sum.re))],
            )
        }
        AnalyticOp::Halasz { func, beta, p } => {
            let f = build_func(func)?;
            let v = analytic::halasz_series::<f64>(&f, *beta, *p)?;
            scalar_report(
                json!({ "f": f.to_string(), "beta": beta, "P": p, "value": v }),
                vec![("value", sig12(v)), ("beta", sig12(*beta)), ("P", p.to_string())],
            )
        }
        AnalyticOp::Jumps { func, p } => {
            let f = build_func(func)?;
            let v = analytic::continuity_diagnostic::<f64>(&f, *p)?;
            scalar_report(
                json!({ "f": f.to_string(), "P": p, "value": v }),
                vec![("value", sig12(v)), ("P", p.to_string())],
            )
        }
        AnalyticOp::Witness { func, v, u, p_cap } => {
            let f = build_func(func)?;
            let (v, u) = (ratio("v", v)?, ratio("u", u)?);
            let w = analytic::greedy_witness(&f, v, u, *p_cap)?;
            let (num, den) = (w.ratio.numer().to_string(), w.ratio.denom().to_string());
            let approx = w.ratio_f64();
            scalar_report(
                json!({
                    "f": f.to_string(), "m": w.m.to_string(), "primes": w.primes,
                    "ratio_num": num, "ratio_den": den, "ratio": approx, "f_value": complex(w.f_value),
                }),
                vec![("m", w.m.to_string()), ("ratio_num", num), ("ratio_den", den), ("ratio", sig12(approx))],
            )
        }
    })
}
