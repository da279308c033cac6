//! Quick validation of the oracle and the rewriting engine against each other.

use crate::affine::{exchange_rules_check, is_valid_block, Element};
use crate::finite::{brick_identities_check, IdentityReport};
use crate::perm::{affine_lengths, bfs_enumerate, AffinePermutation};
use crate::word::{Generator, Rank, Word};

/// One line of the self-check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

/// Whether the permutation model satisfies exactly the Coxeter relations of
/// type Ã_n: involutions, braids of order 3 along the cycle, commutations
/// elsewhere, and no shorter relation between distinct generators.
pub fn coxeter_relations_hold(rank: Rank) -> bool {
    let gens: Vec<Generator> = rank.generators().collect();
    let perm = |letters: &[Generator]| {
        AffinePermutation::from_word(&Word::new(rank, letters.to_vec()).expect("valid letters"))
    };
    gens.iter().all(|&s| {
        let ps = perm(&[s]);
        !ps.is_identity()
            && perm(&[s, s]).is_identity()
            && gens.iter().filter(|&&t| t != s).all(|&t| {
                let st = perm(&[s, t]);
                let order2 = perm(&[s, t, s, t]).is_identity();
                let order3 = perm(&[s, t, s, t, s, t]).is_identity();
                if s.is_adjacent(t, rank) {
                    !st.is_identity() && !order2 && order3
                } else {
                    !st.is_identity() && order2
                }
            })
    })
}

fn line(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> CheckLine {
    CheckLine {
        name: name.into(),
        ok,
        detail: detail.into(),
    }
}

fn identity_line(name: &str, rep: &IdentityReport) -> CheckLine {
    let detail = match rep.violations.first() {
        None => format!("{} instances", rep.checked),
        Some(v) => format!("{} violations, first: {v}", rep.violations.len()),
    };
    line(name, rep.is_clean(), detail)
}

/// Runs the validation suite at small ranks.
pub fn selfcheck() -> Vec<CheckLine> {
    let mut out = Vec::new();
    for n in [2, 3, 4] {
        let rank = Rank::new(n).expect("n ≥ 2");
        out.push(line(
            format!("coxeter relations n={n}"),
            coxeter_relations_hold(rank),
            "",
        ));
    }
    for (n, radius) in [(2, 8), (3, 7)] {
        let rank = Rank::new(n).expect("n ≥ 2");
        let ball = match bfs_enumerate(rank, radius) {
            Ok(b) => b,
            Err(e) => {
                out.push(line(format!("enumeration n={n}"), false, e.to_string()));
                continue;
            }
        };
        let formula = ball.iter().all(|it| it.perm.length() == it.length);
        out.push(line(
            format!("length formula = BFS distance n={n} l≤{radius}"),
            formula,
            format!("{} elements", ball.len()),
        ));
        let affine = affine_lengths(&ball);
        let canon = ball.iter().all(|it| {
            let e = Element::canonicalize(&it.word);
            let w = e.word();
            is_valid_block(rank, e.block().pairs())
                && AffinePermutation::from_word(&w) == it.perm
                && w.len() == it.length
                && e.affine_length() == affine[&it.perm]
        });
        out.push(line(format!("canonical forms n={n} l≤{radius}"), canon, ""));
    }
    let mut bricks = IdentityReport::default();
    let mut exchanges = IdentityReport::default();
    for n in 2..=5 {
        let rank = Rank::new(n).expect("n ≥ 2");
        bricks.merge(brick_identities_check(rank));
        exchanges.merge(exchange_rules_check(rank));
    }
    out.push(identity_line("brick identities n=2..5", &bricks));
    out.push(identity_line("exchange rules n=2..5", &exchanges));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_is_green() {
        for l in selfcheck() {
            assert!(l.ok, "{}: {}", l.name, l.detail);
        }
    }
}
