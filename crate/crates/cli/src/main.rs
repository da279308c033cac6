use std::process::ExitCode;

use atilde::appendix;
use atilde::coset::enumerate_blocks;
use atilde::selfcheck::selfcheck;
use atilde::tower::{embed, is_in_image, preimage};
use atilde::{Element, Generator, HeckeWide, Rank, Word};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

/// Canonical reduced expressions in the affine Weyl group of type Ã_n.
///
/// Elements are given either as words such as "s3 a s3 s1 a" or in
/// canonical form such as "h(4,0) a h(3,1) a | [1,1]".
#[derive(Parser)]
#[command(name = "atilde", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RankArg {
    /// Rank n ≥ 2 of the group W(Ã_n).
    #[arg(short = 'n', long = "rank", value_parser = clap::value_parser!(u32).range(2..))]
    rank: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical form, length and affine length.
    Canon {
        #[command(flatten)]
        rank: RankArg,
        element: String,
    },
    /// Length and affine length.
    Len {
        #[command(flatten)]
        rank: RankArg,
        element: String,
    },
    /// Left and right descent sets.
    Descents {
        #[command(flatten)]
        rank: RankArg,
        element: String,
    },
    /// Product of two elements.
    Mul {
        #[command(flatten)]
        rank: RankArg,
        left: String,
        right: String,
    },
    /// Inverse of an element.
    Inv {
        #[command(flatten)]
        rank: RankArg,
        element: String,
    },
    /// Affine blocks of a given affine length.
    Blocks {
        #[command(flatten)]
        rank: RankArg,
        /// Affine length.
        #[arg(short = 'm')]
        m: usize,
        /// Print only the number of blocks.
        #[arg(long)]
        count_only: bool,
        /// Keep only blocks of at most this length.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Image of an element of rank n under the embedding into rank n + 1.
    Embed {
        #[command(flatten)]
        rank: RankArg,
        element: String,
    },
    /// Whether an element of rank n lies in the image of rank n − 1.
    Member {
        #[command(flatten)]
        rank: RankArg,
        element: String,
    },
    /// Preimage of an element of rank n in rank n − 1.
    Preimage {
        #[command(flatten)]
        rank: RankArg,
        element: String,
    },
    /// Product of two standard basis elements of the Hecke algebra.
    HeckeMul {
        #[command(flatten)]
        rank: RankArg,
        left: String,
        right: String,
    },
    /// Parametric listing of elements of positive affine length (n = 2, 3),
    /// checked against enumeration.
    Appendix {
        #[command(flatten)]
        rank: RankArg,
        /// Largest exponent of each core factor.
        #[arg(long, default_value_t = 2)]
        max_core: usize,
        /// Print only the summary.
        #[arg(long)]
        count_only: bool,
    },
    /// Validates the rewriting engine against the permutation model.
    Selfcheck,
}

/// Failure with the exit code it maps to.
struct Failure(String);

impl From<atilde::Error> for Failure {
    fn from(e: atilde::Error) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn rank(r: &RankArg) -> Result<Rank, Failure> {
    Ok(Rank::new(r.rank as usize)?)
}

fn element(text: &str, rank: Rank) -> Result<Element, Failure> {
    if text.contains('|') {
        Ok(Element::parse_canonical(text, rank)?)
    } else {
        Ok(Element::canonicalize(&Word::parse(text, rank)?))
    }
}

fn element_json(e: &Element) -> Value {
    json!({
        "rank": e.rank().n(),
        "canonical": e.to_canonical_string(),
        "form": e.to_json(),
        "word": e.word().to_string(),
        "length": e.length(),
        "affine_length": e.affine_length(),
    })
}

fn print_element(json_mode: bool, e: &Element) {
    if json_mode {
        println!("{}", element_json(e));
    } else {
        println!("{e}");
        println!("l={} L={}", e.length(), e.affine_length());
    }
}

fn names(gens: &[Generator]) -> Vec<String> {
    gens.iter().map(ToString::to_string).collect()
}

fn run(cli: Cli) -> Outcome {
    let js = cli.json;
    match cli.command {
        Command::Canon {
            rank: r,
            element: text,
        } => print_element(js, &element(&text, rank(&r)?)?),
        Command::Len {
            rank: r,
            element: text,
        } => {
            let e = element(&text, rank(&r)?)?;
            if js {
                println!(
                    "{}",
                    json!({"length": e.length(), "affine_length": e.affine_length()})
                );
            } else {
                println!("l={} L={}", e.length(), e.affine_length());
            }
        }
        Command::Descents {
            rank: r,
            element: text,
        } => {
            let e = element(&text, rank(&r)?)?;
            let (left, right) = (names(&e.left_descents()), names(&e.right_descents()));
            if js {
                println!("{}", json!({"left": left, "right": right}));
            } else {
                println!("left: {}", left.join(" "));
                println!("right: {}", right.join(" "));
            }
        }
        Command::Mul {
            rank: r,
            left,
            right,
        } => {
            let rk = rank(&r)?;
            print_element(js, &element(&left, rk)?.mul(&element(&right, rk)?)?);
        }
        Command::Inv {
            rank: r,
            element: text,
        } => print_element(js, &element(&text, rank(&r)?)?.inverse()),
        Command::Blocks {
            rank: r,
            m,
            count_only,
            max_len,
        } => {
            let family = enumerate_blocks(rank(&r)?, m)?;
            let items: Vec<_> = family
                .items
                .iter()
                .filter(|b| max_len.is_none_or(|cap| b.length() <= cap))
                .collect();
            match (js, count_only) {
                (true, true) => println!("{}", json!({"m": m, "count": items.len()})),
                (true, false) => {
                    let pairs: Vec<_> = items.iter().map(|b| b.pairs().to_vec()).collect();
                    println!("{}", json!({"m": m, "count": items.len(), "blocks": pairs}));
                }
                (false, true) => println!("{}", items.len()),
                (false, false) => items.iter().for_each(|b| println!("{b}")),
            }
        }
        Command::Embed {
            rank: r,
            element: text,
        } => print_element(js, &embed(&element(&text, rank(&r)?)?)),
        Command::Member {
            rank: r,
            element: text,
        } => {
            let rk = rank(&r)?;
            if rk.n() < 3 {
                return Err(Failure(
                    "membership needs n ≥ 3: rank n − 1 must be at least 2".into(),
                ));
            }
            let inside = is_in_image(&element(&text, rk)?);
            if js {
                println!("{}", json!({"member": inside}));
            } else {
                println!("{inside}");
            }
        }
        Command::Preimage {
            rank: r,
            element: text,
        } => {
            let e = element(&text, rank(&r)?)?;
            match preimage(&e) {
                Some(p) => print_element(js, &p),
                None => return Err(Failure(format!("{e} is not in the image of rank n − 1"))),
            }
        }
        Command::HeckeMul {
            rank: r,
            left,
            right,
        } => {
            let rk = rank(&r)?;
            let a = HeckeWide::basis(element(&left, rk)?);
            let b = HeckeWide::basis(element(&right, rk)?);
            let prod = a.mul(&b)?;
            if js {
                let terms: Vec<Value> = prod
                    .terms()
                    .map(|(w, c)| {
                        let coeff: Vec<Value> =
                            c.terms().map(|(k, v)| json!([k, v.to_string()])).collect();
                        json!({"element": w.to_canonical_string(), "coefficient": coeff})
                    })
                    .collect();
                println!("{}", json!({"terms": terms}));
            } else {
                println!("{prod}");
            }
        }
        Command::Appendix {
            rank: r,
            max_core,
            count_only,
        } => {
            let rk = rank(&r)?;
            let entries = appendix::listing(rk, max_core)?;
            let report = appendix::check(rk, max_core)?;
            if js {
                let lines: Vec<Value> = if count_only {
                    Vec::new()
                } else {
                    entries
                        .iter()
                        .map(|e| json!({"family": e.family, "word": e.word.to_string()}))
                        .collect()
                };
                println!(
                    "{}",
                    json!({
                        "entries": lines,
                        "generated": report.generated,
                        "distinct": report.distinct,
                        "expected": report.expected,
                        "missing": report.missing,
                        "unexpected": report.unexpected,
                        "not_canonical": report.not_canonical,
                        "clean": report.is_clean(),
                    })
                );
            } else {
                if !count_only {
                    for e in &entries {
                        println!("{}\t{}", e.family, e.word);
                    }
                }
                println!(
                    "generated={} distinct={} expected={} missing={} unexpected={} not_canonical={}",
                    report.generated,
                    report.distinct,
                    report.expected,
                    report.missing,
                    report.unexpected,
                    report.not_canonical.len()
                );
            }
            if !report.is_clean() {
                return Err(Failure("listing disagrees with enumeration".into()));
            }
        }
        Command::Selfcheck => {
            let lines = selfcheck();
            for l in &lines {
                if js {
                    println!(
                        "{}",
                        json!({"name": l.name, "ok": l.ok, "detail": l.detail})
                    );
                } else {
                    let status = if l.ok { "PASS" } else { "FAIL" };
                    println!("{status} {} {}", l.name, l.detail);
                }
            }
            if lines.iter().any(|l| !l.ok) {
                return Err(Failure("self-check failed".into()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
