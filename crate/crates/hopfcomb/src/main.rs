//! Command-line front end: canonicalization, insertion, class and fiber
//! enumeration, Hopf products and coproducts, hook counts, exact series
//! coefficients, and good-monoid certification.
//!
//! Exit status: 0 on success (and on passing checks), 1 on domain errors
//! (bad names, malformed literals, exceeded bounds) and on failing checks,
//! 2 on usage errors.

use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use serde_json::json;

use hopfcomb::congruence::{canonical_form, check_good, class_of, CongruenceExpr};
use hopfcomb::hopf::{
    check_hopf_axioms, m_coproduct, m_product, pm_coproduct, pm_product, q_coproduct, q_product,
    render_lincomb, render_tensor, s_product, BasisIndex, HopfAlgebraKind, LinComb, Tensor2,
};
use hopfcomb::series::{solve_btm_series, solve_exp_fixed_point, TruncatedSeries};
use hopfcomb::trees::{
    btm_of_word, enumerate_btm, fiber, hook_count, p_symbol, q_symbol, Btm as BtmTree,
};
use hopfcomb::words::{apply_phi, PhiMap, Word};

/// Writes a line to stdout; a closed pipe (e.g. piping into `head`) ends
/// the process quietly instead of panicking.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = writeln!(std::io::stdout(), $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            eprintln!("error: failed writing to stdout: {e}");
            std::process::exit(1);
        }
    }};
}

/// Word-length ceiling for class BFS (classes grow factorially).
const MAX_CLASS_LEN: usize = 9;
/// Default and hard-ceiling tree size for fiber enumeration.
const DEFAULT_FIBER_SIZE: usize = 8;
const MAX_FIBER_SIZE: usize = 9;
/// Tree-size ceiling for `btm --size` listings.
const MAX_BTM_SIZE: usize = 8;
/// Total-degree ceilings for products and coproducts.
const MAX_PRODUCT_DEGREE: usize = 8;
const MAX_SHUFFLE_DEGREE: usize = 10;
const MAX_PM_COPRODUCT_SIZE: usize = 6;
/// Series order ceiling.
const MAX_SERIES_ORDER: usize = 64;
/// Default and ceiling lengths for exhaustive goodness checks.
const DEFAULT_CHECK_LEN: usize = 6;
const MAX_CHECK_LEN: usize = 7;
/// Default and ceiling degrees for Hopf-axiom verification.
const DEFAULT_AXIOM_DEGREE: usize = 3;
const MAX_AXIOM_DEGREE: usize = 5;

#[derive(Parser)]
#[command(
    name = "hopfcomb",
    version,
    about = "Exact combinatorics of words, trees with multiplicities, and their Hopf algebras",
    after_help = "Words are digit strings when every letter is <= 9 (45142234212), \
comma-separated otherwise (3,13,3,2,13); the empty word is 'ε' or 'e'. Trees are \
parenthesized literals: '(2 (1 . .) .)' is a root of multiplicity 2 with a left \
child of multiplicity 1. Congruences: sylv, sylv#, stal, taiga, union(a,b), inter(a,b)."
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a φ-map (std or pack) to a word.
    Phi {
        /// Which map: std | pack.
        #[arg(long)]
        map: String,
        /// The input word.
        #[arg(long)]
        word: String,
    },
    /// Canonical form (lexicographically least member) of a word's class.
    Canon {
        /// Congruence expression, e.g. taiga or union(sylv,stal).
        #[arg(long)]
        congruence: String,
        /// The input word (length capped at 9).
        #[arg(long)]
        word: String,
    },
    /// List every member of a word's congruence class.
    Class {
        /// Congruence expression.
        #[arg(long)]
        congruence: String,
        /// The input word (length capped at 9).
        #[arg(long)]
        word: String,
    },
    /// Insert a word into a binary search tree with multiplicities;
    /// prints the P-symbol and the Q-symbol (positions per letter).
    Insert {
        /// The word to insert, right to left.
        #[arg(long)]
        word: String,
    },
    /// The tree shape B(w) of a word, or all shapes of a given size.
    #[command(group(ArgGroup::new("input").required(true).args(["word", "size"])))]
    Btm {
        /// Word whose insertion shape to compute.
        #[arg(long)]
        word: Option<String>,
        /// List all trees of this size instead (capped at 8).
        #[arg(long)]
        size: Option<usize>,
    },
    /// Hook-length count of a tree: the size of its fiber.
    Hook {
        /// Tree literal, e.g. "(2 (1 . .) (2 . .))".
        #[arg(long)]
        tree: String,
    },
    /// All packed words inserting to a tree.
    Fiber {
        /// Tree literal (size capped at 8 by default).
        #[arg(long)]
        tree: String,
        /// Raise the size cap, up to the hard ceiling of 9.
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Product of two basis elements.
    Product {
        /// Basis: g (FQSym) | m (WQSym) | s (WQSym dual) | q (quotient
        /// class, needs --congruence) | qm (trees) | pm (tree dual).
        #[arg(long)]
        basis: String,
        /// Left factor: a word (g, m, s, q) or a tree literal (qm, pm).
        #[arg(long)]
        left: String,
        /// Right factor, same format as --left.
        #[arg(long)]
        right: String,
        /// Congruence for the q basis.
        #[arg(long)]
        congruence: Option<String>,
        /// φ-map for the q basis: std | pack.
        #[arg(long, default_value = "pack")]
        phi: String,
    },
    /// Coproduct of a basis element.
    Coproduct {
        /// Basis: g | m | q (needs --congruence) | qm | pm.
        #[arg(long)]
        basis: String,
        /// The element, for the word-indexed bases g, m, q.
        #[arg(long)]
        word: Option<String>,
        /// The element, for the tree-indexed bases qm, pm.
        #[arg(long)]
        tree: Option<String>,
        /// Congruence for the q basis.
        #[arg(long)]
        congruence: Option<String>,
        /// φ-map for the q basis: std | pack.
        #[arg(long, default_value = "pack")]
        phi: String,
    },
    /// Exact coefficient sequences of the generating series.
    #[command(group(ArgGroup::new("which").required(true).args(["btm", "exp"])))]
    Series {
        /// Ordinary series of trees with multiplicities,
        /// S = 1 + tS²/(1−t).
        #[arg(long)]
        btm: bool,
        /// Exponential fixed point x = 1 + ∫ eˢ x(s)² ds (truncated
        /// kernel).
        #[arg(long)]
        exp: bool,
        /// Truncation order (capped at 64).
        #[arg(long, default_value_t = 7)]
        order: usize,
        /// Kernel truncation for --exp; defaults to the order.
        #[arg(long)]
        kernel: Option<usize>,
    },
    /// Exhaustively certify that a congruence is φ-good up to a length.
    /// Exits 0 if good, 1 with a counterexample otherwise.
    CheckGood {
        /// Congruence expression.
        #[arg(long)]
        congruence: String,
        /// φ-map: std | pack.
        #[arg(long)]
        phi: String,
        /// Exhaustive bound (default 6 or $HOPFCOMB_MAX_LEN, ceiling 7).
        #[arg(long)]
        maxlen: Option<usize>,
    },
    /// Verify the Hopf axioms of an algebra degree by degree.
    /// Exits 0 if every identity holds, 1 otherwise.
    CheckHopf {
        /// Algebra: fqsym | wqsym | stal | pbtm | pbtm-dual.
        #[arg(long)]
        algebra: String,
        /// Total-degree bound (default 3, ceiling 5; pbtm-dual at 5 takes
        /// minutes).
        #[arg(long)]
        degree: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn parse_word(s: &str) -> Result<Word, String> {
    s.parse().map_err(|e| format!("invalid word {s:?}: {e}"))
}

fn parse_tree(s: &str) -> Result<BtmTree, String> {
    s.parse()
        .map_err(|e: hopfcomb::trees::TreeError| e.to_string())
}

fn parse_congruence(s: &str) -> Result<CongruenceExpr, String> {
    s.parse()
        .map_err(|e| format!("invalid congruence {s:?}: {e}"))
}

fn parse_phi(s: &str) -> Result<PhiMap, String> {
    s.parse()
        .map_err(|_| format!("invalid φ-map {s:?}: expected std or pack"))
}

fn class_length_guard(w: &Word) -> Result<(), String> {
    if w.len() > MAX_CLASS_LEN {
        return Err(format!(
            "word length {} exceeds the class-enumeration cap {MAX_CLASS_LEN}",
            w.len()
        ));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Phi { map, word } => {
            let phi = parse_phi(map)?;
            let w = parse_word(word)?;
            let image = apply_phi(phi, &w);
            if cli.json {
                out!(
                    "{}",
                    json!({
                        "map": phi.to_string(),
                        "word": w.to_string(),
                        "image": image.to_string(),
                        "canonical": image == w,
                    })
                );
            } else {
                out!("{image}");
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Canon { congruence, word } => {
            let c = parse_congruence(congruence)?;
            let w = parse_word(word)?;
            class_length_guard(&w)?;
            let canonical = canonical_form(&c, &w);
            if cli.json {
                out!(
                    "{}",
                    json!({
                        "congruence": c.to_string(),
                        "word": w.to_string(),
                        "canonical": canonical.to_string(),
                    })
                );
            } else {
                out!("{canonical}");
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Class { congruence, word } => {
            let c = parse_congruence(congruence)?;
            let w = parse_word(word)?;
            class_length_guard(&w)?;
            let class = class_of(&c, &w);
            if cli.json {
                out!(
                    "{}",
                    json!({
                        "congruence": c.to_string(),
                        "word": w.to_string(),
                        "canonical": class.representative().to_string(),
                        "size": class.len(),
                        "members": class.members().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                    })
                );
            } else {
                for member in class.members() {
                    out!("{member}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Insert { word } => {
            let w = parse_word(word)?;
            let p = p_symbol(&w);
            let q = q_symbol(&w);
            if cli.json {
                out!(
                    "{}",
                    json!({
                        "word": w.to_string(),
                        "p": p,
                        "q": q,
                    })
                );
            } else {
                out!("{p}");
                out!("{q}");
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Btm { word, size } => {
            if let Some(word) = word {
                let w = parse_word(word)?;
                let t = btm_of_word(&w);
                if cli.json {
                    out!(
                        "{}",
                        json!({"word": w.to_string(), "tree": t, "literal": t.to_string()})
                    );
                } else {
                    out!("{t}");
                }
            } else {
                let n = size.expect("clap guarantees one of --word/--size");
                if n > MAX_BTM_SIZE {
                    return Err(format!("size {n} exceeds the listing cap {MAX_BTM_SIZE}"));
                }
                let trees = enumerate_btm(n);
                if cli.json {
                    out!(
                        "{}",
                        json!({
                            "size": n,
                            "count": trees.len(),
                            "trees": trees.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                        })
                    );
                } else {
                    for t in &trees {
                        out!("{t}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Hook { tree } => {
            let t = parse_tree(tree)?;
            let count = hook_count(&t).map_err(|e| e.to_string())?;
            if cli.json {
                out!(
                    "{}",
                    json!({"tree": t.to_string(), "count": count.to_string()})
                );
            } else {
                out!("{count}");
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Fiber { tree, max_size } => {
            let t = parse_tree(tree)?;
            let cap = max_size.unwrap_or(DEFAULT_FIBER_SIZE);
            if cap > MAX_FIBER_SIZE {
                return Err(format!(
                    "--max-size {cap} exceeds the hard ceiling {MAX_FIBER_SIZE}"
                ));
            }
            if t.size() > cap {
                return Err(format!(
                    "tree size {} exceeds the fiber cap {cap} (see --max-size)",
                    t.size()
                ));
            }
            let words = fiber(&t);
            if cli.json {
                out!(
                    "{}",
                    json!({
                        "tree": t.to_string(),
                        "count": words.len(),
                        "words": words.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                    })
                );
            } else {
                for w in &words {
                    out!("{w}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Product {
            basis,
            left,
            right,
            congruence,
            phi,
        } => {
            let (result, dual) = compute_product(basis, left, right, congruence.as_deref(), phi)?;
            emit_lincomb(cli, basis, &result, dual);
            Ok(ExitCode::SUCCESS)
        }

        Command::Coproduct {
            basis,
            word,
            tree,
            congruence,
            phi,
        } => {
            let (result, dual) = compute_coproduct(
                basis,
                word.as_deref(),
                tree.as_deref(),
                congruence.as_deref(),
                phi,
            )?;
            if cli.json {
                let terms = serde_json::to_value(&result).expect("tensor serializes");
                out!("{}", json!({"basis": basis, "terms": terms}));
            } else {
                out!("{}", render_tensor(&result, dual));
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Series {
            btm,
            exp: _,
            order,
            kernel,
        } => {
            if *order > MAX_SERIES_ORDER {
                return Err(format!(
                    "order {order} exceeds the series cap {MAX_SERIES_ORDER}"
                ));
            }
            let (kind, series) = if *btm {
                ("btm", solve_btm_series(*order))
            } else {
                let k = kernel.unwrap_or(*order).max(1);
                (
                    "exp",
                    solve_exp_fixed_point(*order, k).map_err(|e| e.to_string())?,
                )
            };
            if cli.json {
                let coeffs = serde_json::to_value(&series).expect("series serializes");
                out!(
                    "{}",
                    json!({"kind": kind, "order": order, "coefficients": coeffs})
                );
            } else {
                out!("{}", render_coefficients(&series));
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::CheckGood {
            congruence,
            phi,
            maxlen,
        } => {
            let c = parse_congruence(congruence)?;
            let phi = parse_phi(phi)?;
            let env_default = std::env::var("HOPFCOMB_MAX_LEN")
                .ok()
                .and_then(|v| v.parse::<usize>().ok());
            let maxlen = maxlen.or(env_default).unwrap_or(DEFAULT_CHECK_LEN);
            if maxlen > MAX_CHECK_LEN {
                return Err(format!(
                    "maxlen {maxlen} exceeds the exhaustive-check ceiling {MAX_CHECK_LEN}"
                ));
            }
            let report = check_good(&c, phi, maxlen);
            if cli.json {
                out!(
                    "{}",
                    json!({
                        "congruence": c.to_string(),
                        "phi": phi.to_string(),
                        "maxlen": report.max_length_checked,
                        "phi_congruence_ok": report.phi_congruence_ok,
                        "interval_ok": report.interval_ok,
                        "good": report.is_good(),
                        "counterexample": report
                            .counterexample
                            .as_ref()
                            .map(|(u, v)| vec![u.to_string(), v.to_string()]),
                    })
                );
            } else {
                out!("congruence: {c}");
                out!("phi: {phi}");
                out!("maxlen: {maxlen}");
                out!(
                    "phi-congruence: {}",
                    if report.phi_congruence_ok {
                        "ok"
                    } else {
                        "failed"
                    }
                );
                out!(
                    "interval-compatibility: {}",
                    if report.interval_ok { "ok" } else { "failed" }
                );
                if let Some((u, v)) = &report.counterexample {
                    out!("counterexample: {u} {v}");
                }
                out!("good: {}", if report.is_good() { "yes" } else { "no" });
            }
            Ok(if report.is_good() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::CheckHopf { algebra, degree } => {
            let kind: HopfAlgebraKind = algebra
                .parse()
                .map_err(|e: hopfcomb::hopf::HopfError| e.to_string())?;
            let degree = degree.unwrap_or(DEFAULT_AXIOM_DEGREE);
            if degree > MAX_AXIOM_DEGREE {
                return Err(format!(
                    "degree {degree} exceeds the axiom-check ceiling {MAX_AXIOM_DEGREE}"
                ));
            }
            let report = check_hopf_axioms(kind, degree).map_err(|e| e.to_string())?;
            if cli.json {
                out!(
                    "{}",
                    json!({
                        "algebra": kind.to_string(),
                        "max_degree": report.max_degree,
                        "associativity_ok": report.associativity_ok,
                        "coassociativity_ok": report.coassociativity_ok,
                        "counit_ok": report.counit_ok,
                        "compatibility_ok": report.compatibility_ok,
                        "all_ok": report.all_ok(),
                        "violations": report.violations,
                    })
                );
            } else {
                out!("algebra: {kind}");
                out!("max degree: {}", report.max_degree);
                out!(
                    "associativity: {}",
                    if report.associativity_ok {
                        "ok"
                    } else {
                        "failed"
                    }
                );
                out!(
                    "coassociativity: {}",
                    if report.coassociativity_ok {
                        "ok"
                    } else {
                        "failed"
                    }
                );
                out!("counit: {}", if report.counit_ok { "ok" } else { "failed" });
                out!(
                    "compatibility: {}",
                    if report.compatibility_ok {
                        "ok"
                    } else {
                        "failed"
                    }
                );
                for v in &report.violations {
                    out!("violation: {v}");
                }
                out!(
                    "all axioms hold: {}",
                    if report.all_ok() { "yes" } else { "no" }
                );
            }
            Ok(if report.all_ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

/// Dispatches `product` to the right basis; returns the expansion and
/// whether to render with dual names.
fn compute_product(
    basis: &str,
    left: &str,
    right: &str,
    congruence: Option<&str>,
    phi: &str,
) -> Result<(LinComb<BasisIndex>, bool), String> {
    let degree_guard = |d: usize, cap: usize| -> Result<(), String> {
        if d > cap {
            Err(format!("total degree {d} exceeds the product cap {cap}"))
        } else {
            Ok(())
        }
    };
    match basis {
        "g" | "m" => {
            let phi = if basis == "g" {
                PhiMap::Std
            } else {
                PhiMap::Pack
            };
            let u = parse_word(left)?;
            let v = parse_word(right)?;
            degree_guard(u.len() + v.len(), MAX_PRODUCT_DEGREE)?;
            let p = m_product(phi, &u, &v).map_err(|e| e.to_string())?;
            Ok((p, false))
        }
        "s" => {
            let u = parse_word(left)?;
            let v = parse_word(right)?;
            degree_guard(u.len() + v.len(), MAX_SHUFFLE_DEGREE)?;
            let p = s_product(&u, &v).map_err(|e| e.to_string())?;
            Ok((p, true))
        }
        "q" => {
            let c = parse_congruence(congruence.ok_or("the q basis needs --congruence")?)?;
            let phi = parse_phi(phi)?;
            let u = parse_word(left)?;
            let v = parse_word(right)?;
            degree_guard(u.len() + v.len(), MAX_PRODUCT_DEGREE)?;
            class_length_guard(&u)?;
            class_length_guard(&v)?;
            let a = BasisIndex::Class(c.clone(), canonical_form(&c, &u));
            let b = BasisIndex::Class(c.clone(), canonical_form(&c, &v));
            let p = q_product(&c, phi, &a, &b).map_err(|e| e.to_string())?;
            Ok((p, false))
        }
        "qm" | "pm" => {
            let t1 = parse_tree(left)?;
            let t2 = parse_tree(right)?;
            let cap = if basis == "qm" {
                MAX_PRODUCT_DEGREE
            } else {
                MAX_SHUFFLE_DEGREE
            };
            degree_guard(t1.size() + t2.size(), cap)?;
            if basis == "qm" {
                let p = q_product(
                    &CongruenceExpr::Taiga,
                    PhiMap::Pack,
                    &BasisIndex::Btm(t1),
                    &BasisIndex::Btm(t2),
                )
                .map_err(|e| e.to_string())?;
                Ok((p, false))
            } else {
                let p = pm_product(&t1, &t2).map_err(|e| e.to_string())?;
                Ok((p, true))
            }
        }
        other => Err(format!(
            "unknown basis {other:?}: expected g, m, s, q, qm or pm"
        )),
    }
}

/// Dispatches `coproduct` to the right basis.
fn compute_coproduct(
    basis: &str,
    word: Option<&str>,
    tree: Option<&str>,
    congruence: Option<&str>,
    phi: &str,
) -> Result<(Tensor2, bool), String> {
    let need_word = || -> Result<Word, String> {
        parse_word(word.ok_or(format!("the {basis} basis needs --word"))?)
    };
    let need_tree = || -> Result<BtmTree, String> {
        parse_tree(tree.ok_or(format!("the {basis} basis needs --tree"))?)
    };
    match basis {
        "g" | "m" => {
            let phi = if basis == "g" {
                PhiMap::Std
            } else {
                PhiMap::Pack
            };
            let u = need_word()?;
            if u.len() > MAX_PRODUCT_DEGREE {
                return Err(format!(
                    "degree {} exceeds the coproduct cap {MAX_PRODUCT_DEGREE}",
                    u.len()
                ));
            }
            let d = m_coproduct(phi, &u).map_err(|e| e.to_string())?;
            Ok((d, false))
        }
        "q" => {
            let c = parse_congruence(congruence.ok_or("the q basis needs --congruence")?)?;
            let phi = parse_phi(phi)?;
            let u = need_word()?;
            class_length_guard(&u)?;
            let a = BasisIndex::Class(c.clone(), canonical_form(&c, &u));
            let d = q_coproduct(&c, phi, &a).map_err(|e| e.to_string())?;
            Ok((d, false))
        }
        "qm" => {
            let t = need_tree()?;
            if t.size() > MAX_PRODUCT_DEGREE {
                return Err(format!(
                    "tree size {} exceeds the coproduct cap {MAX_PRODUCT_DEGREE}",
                    t.size()
                ));
            }
            let d = q_coproduct(&CongruenceExpr::Taiga, PhiMap::Pack, &BasisIndex::Btm(t))
                .map_err(|e| e.to_string())?;
            Ok((d, false))
        }
        "pm" => {
            let t = need_tree()?;
            if t.size() > MAX_PM_COPRODUCT_SIZE {
                return Err(format!(
                    "tree size {} exceeds the dual-coproduct cap {MAX_PM_COPRODUCT_SIZE}",
                    t.size()
                ));
            }
            let d = pm_coproduct(&t).map_err(|e| e.to_string())?;
            Ok((d, true))
        }
        other => Err(format!(
            "unknown basis {other:?}: expected g, m, q, qm or pm"
        )),
    }
}

fn emit_lincomb(cli: &Cli, basis: &str, x: &LinComb<BasisIndex>, dual: bool) {
    if cli.json {
        let terms = serde_json::to_value(x).expect("combination serializes");
        out!("{}", json!({"basis": basis, "terms": terms}));
    } else {
        out!("{}", render_lincomb(x, dual));
    }
}

/// Coefficients joined as `c0, c1, …`; exact rationals print as `p/q`.
fn render_coefficients(s: &TruncatedSeries) -> String {
    s.coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
