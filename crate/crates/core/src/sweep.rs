//! Exhaustive consistency sweeps over the two monomial families: compare
//! the closed-form resolutions against the lcm-lattice homology oracle,
//! run the shape decomposition and characterization on every table, and
//! round-trip through the monomial realization where one exists.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::aci::{check_characterization, decompose, Verdict};
use crate::gorenstein::CiMinProvider;
use crate::monomial::{
    minimal_resolution_oracle, realize_t2, realize_t3, resolution_mont2, resolution_mont3,
    MonomialIdeal3,
};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepRow {
    /// "mont2" or "mont3"
    pub family: String,
    /// (a1,a2,a3,b1,b2) resp. (a1,a2,a3,b1,b2,b3)
    pub params: Vec<i64>,
    /// closed form == oracle resolution of the defining ideal
    pub oracle_match: bool,
    /// outcome of decompose + characterization on the oracle table
    pub verdict: String,
    /// outcome of re-realizing the decomposed shape as a monomial ideal
    /// and resolving it again: "ok", "mismatch", "skipped: ..." or an error
    pub realization: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    pub total: usize,
    pub oracle_mismatches: usize,
    /// tables that failed the shape decomposition outright
    pub decompose_failures: usize,
    /// characterization counterexamples: genuine resolutions the printed
    /// inequalities reject (reported, not "fixed")
    pub invalid: usize,
    pub inconclusive: usize,
    pub realization_failures: usize,
}

impl SweepReport {
    fn from_rows(rows: Vec<SweepRow>) -> Self {
        let total = rows.len();
        let oracle_mismatches = rows.iter().filter(|r| !r.oracle_match).count();
        let decompose_failures = rows
            .iter()
            .filter(|r| r.verdict.starts_with("no-decomposition"))
            .count();
        let invalid = rows.iter().filter(|r| r.verdict.starts_with("invalid")).count();
        let inconclusive = rows.iter().filter(|r| r.verdict == "inconclusive").count();
        let realization_failures = rows
            .iter()
            .filter(|r| r.realization == "mismatch" || r.realization.starts_with("error"))
            .count();
        SweepReport {
            rows,
            total,
            oracle_mismatches,
            decompose_failures,
            invalid,
            inconclusive,
            realization_failures,
        }
    }

    /// Hard invariants: closed forms agree with the oracle, every table
    /// decomposes (and hence satisfies the parity sum identity), and every
    /// attempted realization resolves back to the same table. Rows the
    /// characterization marks invalid are deliberately not counted here:
    /// those are reported as counterexamples to the printed inequalities.
    pub fn all_consistent(&self) -> bool {
        self.oracle_mismatches == 0
            && self.decompose_failures == 0
            && self.realization_failures == 0
    }

    /// CSV with one row per parameter tuple; see docs/formats.md.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("family,params,oracle_match,verdict,realization,repro\n");
        for r in &self.rows {
            let params = r
                .params
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            let repro = format!(
                "aci3 sweep --family {} --only \"{}\"",
                r.family, params
            );
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.family,
                params,
                r.oracle_match,
                csv_field(&r.verdict),
                csv_field(&r.realization),
                csv_field(&repro),
            ));
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn verdict_string(v: &Verdict) -> String {
    match v {
        Verdict::Valid => "valid".to_string(),
        Verdict::Invalid(r) => format!("invalid: {r:?}"),
        Verdict::Inconclusive => "inconclusive".to_string(),
    }
}

fn analyze(family: &str, params: Vec<i64>, ideal: MonomialIdeal3) -> SweepRow {
    let closed = match family {
        "mont2" => resolution_mont2(params[0], params[1], params[2], params[3], params[4]),
        _ => resolution_mont3(
            [params[0], params[1], params[2]],
            [params[3], params[4], params[5]],
        ),
    }
    .expect("parameters pre-filtered to the family preconditions");
    let oracle = minimal_resolution_oracle(&ideal).expect("artinian, 4 generators");
    let oracle_match = closed == oracle;

    let (verdict, realization) = match decompose(&oracle) {
        Err(e) => (format!("no-decomposition: {e}"), "skipped: no decomposition".to_string()),
        Ok(dec) => {
            let v = check_characterization(&dec, &CiMinProvider);
            let realization = match v {
                Verdict::Invalid(_) => "skipped: invalid".to_string(),
                _ => {
                    let realized = match dec.shape.t() {
                        2 => realize_t2(&dec.shape),
                        3 => realize_t3(&dec.shape),
                        t => Err(crate::monomial::MonomialError::NotType3(t)),
                    };
                    match realized {
                        Ok(j) => match minimal_resolution_oracle(&j) {
                            Ok(tbl) if tbl == dec.shape.build_table() => "ok".to_string(),
                            Ok(_) => "mismatch".to_string(),
                            Err(e) => format!("error: {e}"),
                        },
                        Err(crate::monomial::MonomialError::NotRealizable(m)) => {
                            format!("skipped: not realizable ({m})")
                        }
                        Err(crate::monomial::MonomialError::CharacterizationFailed(m)) => {
                            format!("skipped: characterization ({m})")
                        }
                        Err(e) => format!("error: {e}"),
                    }
                }
            };
            (verdict_string(&v), realization)
        }
    };

    SweepRow {
        family: family.to_string(),
        params,
        oracle_match,
        verdict,
        realization,
    }
}

/// All `(x^{a1}, y^{a2}, z^{a3}, x^{b1} y^{b2})` with exponents up to
/// `max_exponent`, minimality of the four generators enforced by the
/// family preconditions `0 < b1 < a1`, `0 < b2 < a2`.
pub fn sweep_mont2(max_exponent: i64) -> SweepReport {
    let mut params = Vec::new();
    for a1 in 2..=max_exponent {
        for a2 in 2..=max_exponent {
            for a3 in 1..=max_exponent {
                for b1 in 1..a1 {
                    for b2 in 1..a2 {
                        params.push(vec![a1, a2, a3, b1, b2]);
                    }
                }
            }
        }
    }
    let rows: Vec<SweepRow> = params
        .into_par_iter()
        .map(|p| {
            let ideal = MonomialIdeal3::new(vec![
                [p[0] as u32, 0, 0],
                [0, p[1] as u32, 0],
                [0, 0, p[2] as u32],
                [p[3] as u32, p[4] as u32, 0],
            ]);
            analyze("mont2", p, ideal)
        })
        .collect();
    SweepReport::from_rows(rows)
}

/// All `(x^{a1}, y^{a2}, z^{a3}, x^{b1} y^{b2} z^{b3})` with exponents up
/// to `max_exponent` and `0 < b_i < a_i`.
pub fn sweep_mont3(max_exponent: i64) -> SweepReport {
    let mut params = Vec::new();
    for a1 in 2..=max_exponent {
        for a2 in 2..=max_exponent {
            for a3 in 2..=max_exponent {
                for b1 in 1..a1 {
                    for b2 in 1..a2 {
                        for b3 in 1..a3 {
                            params.push(vec![a1, a2, a3, b1, b2, b3]);
                        }
                    }
                }
            }
        }
    }
    let rows: Vec<SweepRow> = params
        .into_par_iter()
        .map(|p| {
            let ideal = MonomialIdeal3::new(vec![
                [p[0] as u32, 0, 0],
                [0, p[1] as u32, 0],
                [0, 0, p[2] as u32],
                [p[3] as u32, p[4] as u32, p[5] as u32],
            ]);
            analyze("mont3", p, ideal)
        })
        .collect();
    SweepReport::from_rows(rows)
}
