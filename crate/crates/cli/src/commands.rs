use rayon::prelude::*;
use serde_json::{json, Value};

use invq_core::arith::rational::to_decimal;
use invq_core::arith::{int, rat, Rational};
use invq_core::assembly::Parity;
use invq_core::charpoly::{recurrence_residual, verify_inverse_identity};
use invq_core::detkit::{
    verify_boundary, verify_cauchy, verify_corollary_full, verify_kron_factorization, verify_legendre_hooks,
    verify_thm31, DetReport,
};
use invq_core::spectra::asymptotics::ASYMPTOTICS_CSV_HEADER;
use invq_core::spectra::bounds::BOUNDS_CSV_HEADER;
use invq_core::spectra::roots::FIGURE_CSV_HEADER;
use invq_core::spectra::{all_roots, asymptotic_row, bound_report, mu_cross_check, mu_max};

use crate::args::{IdentitySet, Range};
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok,
    Undecided,
    Failed,
}

#[derive(Clone, Debug)]
pub struct Record {
    pub n: u64,
    pub key: String,
    pub json: Value,
    pub csv: Vec<String>,
    pub text: String,
    pub status: Status,
}

#[derive(Debug)]
pub struct Report {
    pub csv_header: &'static str,
    pub records: Vec<Record>,
}

impl Report {
    pub fn status(&self) -> Status {
        self.records.iter().map(|r| r.status).max().unwrap_or(Status::Ok)
    }
}

fn ok_if(b: bool) -> Status {
    if b {
        Status::Ok
    } else {
        Status::Failed
    }
}

/// Runs `f` for every n on a pool of `jobs` threads; results keep range order.
fn per_n<T: Send>(
    range: Range,
    jobs: u32,
    f: impl Fn(u64) -> Result<T, CliError> + Sync + Send,
) -> Result<Vec<T>, CliError> {
    let ns: Vec<u64> = range.iter().collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs as usize)
        .build()
        .map_err(|e| CliError::Runtime(e.to_string()))?;
    pool.install(|| ns.par_iter().map(|&n| f(n)).collect())
}

fn det_record(r: DetReport) -> Record {
    let key = serde_json::to_value(r.identity).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
    Record {
        n: r.n,
        text: format!("n={:<3} {:<14} {}", r.n, key, if r.equal { "equal" } else { "DIFFERS" }),
        csv: vec![r.n.to_string(), key.clone(), r.equal.to_string()],
        json: json!({"n": r.n, "identity": key, "equal": r.equal, "lhs": r.lhs, "rhs": r.rhs}),
        status: ok_if(r.equal),
        key,
    }
}

fn simple_record(n: u64, key: &str, equal: bool, detail: Value) -> Record {
    Record {
        n,
        key: key.to_string(),
        text: format!("n={n:<3} {key:<14} {}", if equal { "equal" } else { "DIFFERS" }),
        csv: vec![n.to_string(), key.to_string(), equal.to_string()],
        json: json!({"n": n, "identity": key, "equal": equal, "detail": detail}),
        status: ok_if(equal),
    }
}

const IDENTITIES: [IdentitySet; 8] = [
    IdentitySet::Thm31,
    IdentitySet::Corollary,
    IdentitySet::Inverse,
    IdentitySet::Cauchy,
    IdentitySet::Recurrence,
    IdentitySet::Boundary,
    IdentitySet::Legendre,
    IdentitySet::Kronecker,
];

/// Valid n for an identity: lower bound and optional upper bound.
fn domain(id: IdentitySet) -> (u64, Option<u64>) {
    match id {
        IdentitySet::Corollary | IdentitySet::Inverse => (1, None),
        IdentitySet::Kronecker => (1, Some(6)),
        _ => (0, None),
    }
}

/// Ranges used when `--range` is not given.
pub fn default_verify_range(id: IdentitySet) -> Range {
    match id {
        IdentitySet::Thm31 | IdentitySet::Cauchy => Range::new(0, 12),
        IdentitySet::Corollary | IdentitySet::Inverse => Range::new(1, 10),
        IdentitySet::Recurrence => Range::new(0, 100),
        IdentitySet::Boundary => Range::new(0, 30),
        IdentitySet::Legendre => Range::new(0, 10),
        IdentitySet::Kronecker => Range::new(1, 6),
        IdentitySet::All => Range::new(0, 0),
    }
}

/// Fixed sample points for the Kronecker factorization check.
fn kron_samples() -> [Rational; 3] {
    [rat(7, 3), rat(-5, 2), rat(211, 17)]
}

fn verify_one(id: IdentitySet, n: u64) -> Result<Vec<Record>, CliError> {
    Ok(match id {
        IdentitySet::Thm31 => {
            let (e, o) = verify_thm31(n);
            std::iter::once(e).chain(o).map(det_record).collect()
        }
        IdentitySet::Corollary => vec![det_record(verify_corollary_full(n)?)],
        IdentitySet::Inverse => Parity::BOTH
            .iter()
            .map(|&p| {
                let c = verify_inverse_identity(p, n)?;
                Ok(simple_record(n, &format!("inverse-{}", p.ell()), c.holds, serde_json::to_value(&c)?))
            })
            .collect::<Result<_, CliError>>()?,
        IdentitySet::Cauchy => Parity::BOTH.iter().map(|&p| det_record(verify_cauchy(p, n))).collect(),
        IdentitySet::Recurrence => {
            let r = recurrence_residual(n);
            vec![simple_record(n, "recurrence", r.is_zero(), json!({"residual": r}))]
        }
        IdentitySet::Boundary => {
            let b = verify_boundary(n);
            vec![det_record(b.even), det_record(b.odd), det_record(b.full)]
        }
        IdentitySet::Legendre => {
            let (e, o) = verify_legendre_hooks(n);
            vec![det_record(e), det_record(o)]
        }
        IdentitySet::Kronecker => {
            let reports =
                kron_samples().iter().map(|s| verify_kron_factorization(n, s)).collect::<Result<Vec<_>, _>>()?;
            let equal = reports.iter().all(|r| r.structure && r.equal);
            vec![simple_record(n, "kronecker", equal, serde_json::to_value(&reports)?)]
        }
        IdentitySet::All => unreachable!("expanded by the caller"),
    })
}

pub fn cmd_verify(set: IdentitySet, range: Option<Range>, jobs: u32) -> Result<Report, CliError> {
    let mut plan = Vec::new();
    if set == IdentitySet::All {
        for id in IDENTITIES {
            let r = match range {
                None => default_verify_range(id),
                Some(r) => {
                    let (lo, hi) = domain(id);
                    let start = r.start.max(lo);
                    let end = hi.map_or(r.end, |h| r.end.min(h));
                    if start > end {
                        continue;
                    }
                    Range::new(start, end)
                }
            };
            plan.push((id, r));
        }
    } else {
        let r = range.unwrap_or_else(|| default_verify_range(set));
        let (lo, hi) = domain(set);
        if !r.within(lo, hi) {
            let upper = hi.map_or(String::new(), |h| format!(" and n <= {h}"));
            return Err(CliError::Usage(format!("{set:?} needs n >= {lo}{upper}, got range {r}")));
        }
        plan.push((set, r));
    }
    let mut records = Vec::new();
    for (id, r) in plan {
        for rs in per_n(r, jobs, |n| verify_one(id, n))? {
            records.extend(rs);
        }
    }
    records.sort_by(|a, b| (a.n, &a.key).cmp(&(b.n, &b.key)));
    Ok(Report { csv_header: "n,identity,equal", records })
}

fn need_from(range: Range, lo: u64, what: &str) -> Result<(), CliError> {
    if range.start < lo {
        return Err(CliError::Usage(format!("{what} needs n >= {lo}, got range {range}")));
    }
    Ok(())
}

pub fn cmd_bounds(range: Range, tol: &Rational, bits: u32, jobs: u32) -> Result<Report, CliError> {
    need_from(range, 2, "bounds")?;
    let reports = per_n(range, jobs, |n| Ok(bound_report(n, tol, bits)?))?;
    let records = reports
        .into_iter()
        .map(|r| {
            let o = &r.orderings;
            let status = if o.any_failed() {
                Status::Failed
            } else if o.any_undecided() {
                Status::Undecided
            } else {
                Status::Ok
            };
            let row = r.csv_row(15);
            Record {
                n: r.n,
                key: "bounds".into(),
                text: format!(
                    "n={:<4} m={} lambda in [{}, {}] f1={} M={} ok={}{}",
                    r.n,
                    r.m_lower.to_real(bits).to_decimal(9),
                    to_decimal(&r.lambda_n.lo, 9),
                    to_decimal(&r.lambda_n.hi, 9),
                    r.f1,
                    r.big_m_upper.value.to_decimal(9),
                    o.ok(),
                    if status == Status::Undecided { " (undecided strictness)" } else { "" }
                ),
                csv: row.split(',').map(String::from).collect(),
                json: serde_json::to_value(&r).unwrap_or(Value::Null),
                status,
            }
        })
        .collect();
    Ok(Report { csv_header: BOUNDS_CSV_HEADER, records })
}

pub fn cmd_figure(range: Range, tol: &Rational, jobs: u32) -> Result<Report, CliError> {
    need_from(range, 2, "figure")?;
    let tables = per_n(range, jobs, |n| Ok(all_roots(n, tol)?))?;
    let mut records = Vec::new();
    for t in tables {
        for (k, r) in t.roots.iter().enumerate() {
            let mid = to_decimal(&r.mid(), 12);
            records.push(Record {
                n: t.n,
                key: format!("{k:06}"),
                text: format!("n={:<3} root {:>2}: {mid}", t.n, k + 1),
                csv: vec![t.n.to_string(), mid.clone(), (t.n % 2).to_string()],
                json: json!({"n": t.n, "index": k + 1, "root": r, "parity": t.n % 2}),
                status: ok_if(r.lo > int(0)),
            });
        }
    }
    Ok(Report { csv_header: FIGURE_CSV_HEADER, records })
}

pub fn cmd_asymptotics(ns: Vec<u64>, tol: &Rational, bits: u32, jobs: u32) -> Result<Report, CliError> {
    if let Some(&bad) = ns.iter().find(|&&n| n < 2) {
        return Err(CliError::Usage(format!("asymptotics needs n >= 2, got {bad}")));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs as usize)
        .build()
        .map_err(|e| CliError::Runtime(e.to_string()))?;
    let rows: Vec<_> =
        pool.install(|| ns.par_iter().map(|&n| asymptotic_row(n, tol, bits)).collect::<Result<_, _>>())?;
    let records = rows
        .into_iter()
        .map(|r| Record {
            n: r.n,
            key: "asymptotics".into(),
            text: format!(
                "n={:<4} lambda/n^4={} (1/pi^2={}) lambda/f1={} first roots {} | {}",
                r.n,
                r.lambda_over_n4.to_decimal(9),
                r.targets.inv_pi2.to_decimal(9),
                r.lambda_over_f1.to_decimal(9),
                to_decimal(&r.smallest_root_even.mid(), 9),
                to_decimal(&r.smallest_root_odd.mid(), 9),
            ),
            csv: r.csv_row(15).split(',').map(String::from).collect(),
            status: ok_if(
                r.lambda_over_f1.to_rational() > Rational::from_integer(0.into())
                    && r.lambda_over_f1.to_rational() <= Rational::from_integer(1.into()),
            ),
            json: serde_json::to_value(&r).unwrap_or(Value::Null),
        })
        .collect();
    Ok(Report { csv_header: ASYMPTOTICS_CSV_HEADER, records })
}

pub fn cmd_boundary(range: Range, jobs: u32) -> Result<Report, CliError> {
    need_from(range, 1, "boundary")?;
    let rows = per_n(range, jobs, |n| {
        let mu = mu_max(n)?;
        let check = mu_cross_check(n)?;
        let b = verify_boundary(n);
        Ok((n, mu, check, b))
    })?;
    let records = rows
        .into_iter()
        .map(|(n, mu, check, b)| {
            let ok = check.equal && b.all_equal();
            Record {
                n,
                key: "boundary".into(),
                text: format!("n={n:<3} mu={mu} identities={}", if ok { "equal" } else { "DIFFER" }),
                csv: vec![n.to_string(), mu.to_string(), check.equal.to_string(), b.all_equal().to_string()],
                json: json!({"n": n, "mu": mu.to_string(), "mu_check": check, "identities": b}),
                status: ok_if(ok),
            }
        })
        .collect();
    Ok(Report { csv_header: "n,mu,mu_is_largest_root,identities_equal", records })
}
