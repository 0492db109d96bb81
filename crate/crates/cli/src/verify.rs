//! Identity suites run by `pdr verify`.

use num_bigint::BigInt;
use pdr_core::weyl::{
    type_a_characters, verify_by_enumeration, MolienData, DEFAULT_ENUMERATION_BUDGET,
};
use pdr_core::{
    fake_degree_qhook, hp0_slice_series, ih_orbit_closure, kostka_foulkes, kostka_from_fake_degree,
    orbit_dim, partitions_of, pn_series, printed_audit, springer_fiber_series, BiLaurentPoly,
    Family, Partition, WeylType,
};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Regular,
    Oracle,
    PnMolien,
    Sl2,
    Duality,
    Proudfoot,
    Specialization,
    Weights,
    SelfDuality,
    WeylTable,
    PrintedAudit,
}

impl Suite {
    const EACH: [Suite; 11] = [
        Suite::Regular,
        Suite::Oracle,
        Suite::PnMolien,
        Suite::Sl2,
        Suite::Duality,
        Suite::Proudfoot,
        Suite::Specialization,
        Suite::Weights,
        Suite::SelfDuality,
        Suite::WeylTable,
        Suite::PrintedAudit,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub range: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    /// Measured values worth recording even when the check passes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(name: &str, range: String, failure: Option<String>) -> Self {
        Check {
            name: name.into(),
            range,
            pass: failure.is_none(),
            counterexample: failure,
            detail: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub overall: Status,
}

impl VerificationReport {
    pub fn from_checks(checks: Vec<Check>) -> Self {
        let overall = if checks.iter().all(|c| c.pass) {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport { checks, overall }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            out += &format!("{mark} {} [{}]", c.name, c.range);
            if let Some(d) = &c.detail {
                out += &format!(" {d}");
            }
            if let Some(x) = &c.counterexample {
                out += &format!(" counterexample: {x}");
            }
            out.push('\n');
        }
        out += match self.overall {
            Status::Pass => "overall: pass",
            Status::Fail => "overall: fail",
        };
        out
    }

    pub fn latex(&self) -> String {
        let mut out = String::from("\\begin{tabular}{lll}\n");
        for c in &self.checks {
            let mark = if c.pass { "pass" } else { "fail" };
            out += &format!(
                "{} & {} & {mark} \\\\\n",
                c.name.replace('_', "\\_"),
                c.range
            );
        }
        out += "\\end{tabular}";
        out
    }
}

/// Run one suite (or all of them) for sizes up to `max_n`.
pub fn run_suite(suite: Suite, max_n: u32) -> VerificationReport {
    let checks = match suite {
        Suite::All => Suite::EACH
            .iter()
            .flat_map(|&s| checks_for(s, max_n))
            .collect(),
        s => checks_for(s, max_n),
    };
    VerificationReport::from_checks(checks)
}

fn checks_for(suite: Suite, max_n: u32) -> Vec<Check> {
    let upto = format!("n <= {max_n}");
    match suite {
        Suite::All => unreachable!(),
        Suite::Regular => regular(max_n),
        Suite::Oracle => vec![Check::new("fake_degree_oracles", upto, oracle(max_n))],
        Suite::PnMolien => vec![Check::new("pn_matches_molien", upto, pn_molien(max_n))],
        Suite::Sl2 => vec![Check::new("sl2_closed_form", "n = 2".into(), sl2())],
        Suite::Duality => vec![Check::new("hp0_conjugation_symmetry", upto, duality(max_n))],
        Suite::Proudfoot => vec![Check::new("hp0_equals_dual_ih", upto, proudfoot(max_n))],
        Suite::Specialization => vec![Check::new(
            "springer_fiber_specializations",
            upto,
            specialization(max_n),
        )],
        Suite::Weights => vec![Check::new("nonpositive_weights", upto, weights(max_n))],
        Suite::SelfDuality => vec![Check::new(
            "coinvariant_self_duality",
            upto,
            self_duality(max_n),
        )],
        Suite::WeylTable => weyl_table(),
        Suite::PrintedAudit => audit(max_n),
    }
}

/// First failure over all partitions of `1..=max_n`.
fn first_failure(max_n: u32, mut f: impl FnMut(&Partition) -> Option<String>) -> Option<String> {
    (1..=max_n).flat_map(partitions_of).find_map(|l| f(&l))
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn regular(max_n: u32) -> Vec<Check> {
    let failure = (1..=max_n).find_map(|n| {
        let total = pn_series(n).total_dim();
        (total != factorial(n)).then(|| format!("n={n}: P_N(1,1)={total}"))
    });
    let mut checks = vec![Check::new(
        "regular_count_type_a",
        format!("n <= {max_n}"),
        failure,
    )];
    for (f, r) in [
        (Family::B, 2),
        (Family::B, 3),
        (Family::G2, 2),
        (Family::F4, 4),
    ] {
        let w = WeylType::new(f, r).expect("supported");
        let failure =
            match MolienData::new(&w, DEFAULT_ENUMERATION_BUDGET).and_then(|d| d.pn_series()) {
                Ok(p) if p.eval_at_one() == BigInt::from(w.order) => None,
                Ok(p) => Some(format!("P_N(1,1)={} but |W|={}", p.eval_at_one(), w.order)),
                Err(e) => Some(e.to_string()),
            };
        checks.push(Check::new("regular_count_molien", w.to_string(), failure));
    }
    checks
}

fn oracle(max_n: u32) -> Option<String> {
    for n in 1..=max_n {
        let data = match WeylType::symmetric(n as usize).and_then(|w| MolienData::new(&w, 0)) {
            Ok(d) => d,
            Err(e) => return Some(format!("n={n}: {e}")),
        };
        for lambda in partitions_of(n) {
            let by_charge = kostka_foulkes(&lambda, &Partition::column(n)).expect("same size");
            let by_hook = kostka_from_fake_degree(&lambda);
            let by_molien = data.fake_degree(&type_a_characters(&lambda)).map(|fd| {
                fd.reverse()
                    .shift((n * n.saturating_sub(1) / 2) as i64)
                    .with_var("t")
            });
            match by_molien {
                Ok(m) if m == by_charge && by_hook == by_charge => {}
                Ok(m) => {
                    return Some(format!(
                        "{lambda}: charge {by_charge}, q-hook {by_hook}, molien {m}"
                    ))
                }
                Err(e) => return Some(format!("{lambda}: {e}")),
            }
        }
    }
    None
}

fn pn_molien(max_n: u32) -> Option<String> {
    (1..=max_n).find_map(|n| {
        let per_partition = pn_series(n).poly;
        match WeylType::symmetric(n as usize).and_then(|w| MolienData::new(&w, 0)?.pn_series()) {
            Ok(m) if m == per_partition => None,
            Ok(m) => Some(format!("n={n}: {per_partition} vs {m}")),
            Err(e) => Some(format!("n={n}: {e}")),
        }
    })
}

fn sl2() -> Option<String> {
    let expect = BiLaurentPoly::from_terms([((0, 0), BigInt::from(1)), ((2, -2), BigInt::from(1))]);
    let got = pn_series(2).poly;
    (got != expect).then(|| format!("P_N = {got}"))
}

fn duality(max_n: u32) -> Option<String> {
    first_failure(max_n, |l| {
        let a = hp0_slice_series(l);
        let b = hp0_slice_series(&l.conjugate());
        (a != b).then(|| format!("{l}: {a} vs {}: {b}", l.conjugate()))
    })
}

fn proudfoot(max_n: u32) -> Option<String> {
    first_failure(max_n, |l| {
        let a = hp0_slice_series(l);
        let b = ih_orbit_closure(&l.conjugate());
        (a != b).then(|| format!("{l}: HP0 {a} vs IH {b}"))
    })
}

fn specialization(max_n: u32) -> Option<String> {
    (1..=max_n).find_map(|n| {
        let bottom = springer_fiber_series(&Partition::column(n)).poly;
        let top = springer_fiber_series(&Partition::row(n)).poly;
        if bottom != pn_series(n).poly {
            Some(format!("n={n}: fiber over 0 is {bottom}"))
        } else if top != BiLaurentPoly::one() {
            Some(format!("n={n}: fiber over the regular orbit is {top}"))
        } else {
            None
        }
    })
}

fn weights(max_n: u32) -> Option<String> {
    (1..=max_n).find_map(|n| {
        let p = pn_series(n).poly;
        p.y_range()
            .filter(|&(_, hi)| hi > 0)
            .map(|(_, hi)| format!("n={n}: y^{hi} occurs"))
    })
}

fn self_duality(max_n: u32) -> Option<String> {
    first_failure(max_n, |l| {
        let n = l.size() as i64;
        let lhs = fake_degree_qhook(&l.conjugate());
        let rhs = fake_degree_qhook(l).reverse().shift(n * (n - 1) / 2);
        (lhs != rhs).then(|| format!("{l}: {lhs} vs {rhs}"))
    })
}

fn weyl_table() -> Vec<Check> {
    let types = [
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::B, 2),
        (Family::B, 3),
        (Family::B, 4),
        (Family::D, 4),
        (Family::G2, 2),
        (Family::F4, 4),
    ];
    types
        .iter()
        .map(|&(f, r)| {
            let w = WeylType::new(f, r).expect("supported");
            let failure = match verify_by_enumeration(&w, DEFAULT_ENUMERATION_BUDGET) {
                Ok(c) if c.matches(&w) => None,
                Ok(c) => Some(format!(
                    "enumerated |W|={} reflections={}; table |W|={} N={}",
                    c.order, c.reflections, w.order, w.num_positive_roots
                )),
                Err(e) => Some(e.to_string()),
            };
            let mut check = Check::new("degree_table_by_enumeration", w.to_string(), failure);
            check.detail = Some(format!("degrees {:?}", w.degrees));
            check
        })
        .collect()
}

fn audit(max_n: u32) -> Vec<Check> {
    (1..=max_n)
        .flat_map(partitions_of)
        .map(|mu| {
            let a = printed_audit(&mu);
            let failure = match a.ratio_exponent {
                Some(_) => None,
                None => Some("ratio is not a power of y".into()),
            };
            let mut check = Check::new("printed_slice_ratio", mu.to_string(), failure);
            check.detail = Some(format!(
                "exponent={} 2n(mu)={} dim_O={}",
                a.ratio_exponent.map_or("none".into(), |k| k.to_string()),
                a.two_n_stat,
                orbit_dim(&mu)
            ));
            check
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_status_follows_checks() {
        let ok = Check::new("a", "r".into(), None);
        let bad = Check::new("b", "r".into(), Some("x".into()));
        assert!(VerificationReport::from_checks(vec![ok.clone()]).passed());
        assert!(!VerificationReport::from_checks(vec![ok, bad]).passed());
        assert!(VerificationReport::from_checks(vec![]).passed());
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::EACH {
            let r = run_suite(s, 4);
            assert!(r.passed(), "{s:?}: {}", r.text());
        }
    }

    #[test]
    fn audit_records_exponents() {
        let r = run_suite(Suite::PrintedAudit, 3);
        let line = r.text();
        assert!(
            line.contains("PASS printed_slice_ratio [(3)] exponent=-6 2n(mu)=0 dim_O=6"),
            "{line}"
        );
    }
}
