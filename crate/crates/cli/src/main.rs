use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use braidlam::automatic::{
    family_checks, offset_scan, search_witness, Mode, SearchBudget, SearchOutcome,
};
use braidlam::automaton::{build_automaton_with, BuildOptions, NormalFormDfa, Variant};
use braidlam::relax::{classify_geometric, classify_syntactic, dehornoy_cmp, rnf_with, trace};
use braidlam::verify::{
    check_transitions, oracle_discrepancies, random_right_words, relaxation_violations, rewrite,
    right_words, word_problem_discrepancies,
};
use braidlam::word::random_word_with;
use braidlam::{ArtinWord, Error, Lamination, SlidingWord, Strategy};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(
    name = "braidlam",
    version,
    about = "Relaxation normal forms of braids via tight laminations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of a braid word.
    Normalize {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, default_value = "right")]
        strategy: Strategy,
        /// Also print the Artin expansion and the norm after each step.
        #[arg(long)]
        trace: bool,
    },
    /// Build or inspect the normal-form automaton.
    Automaton {
        #[command(subcommand)]
        command: AutomatonCommand,
    },
    /// Exit 0 if the automaton accepts the sliding word, 1 otherwise.
    Accepts {
        #[arg(long)]
        automaton: PathBuf,
        word: String,
    },
    /// Exit 0 if two words represent the same braid, 1 otherwise.
    Equal {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        alphabet: Option<Alphabet>,
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// Compare two braids in the Dehornoy order.
    Order {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        alphabet: Option<Alphabet>,
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// Positivity class, computed geometrically and from the normal form.
    Classify {
        #[command(flatten)]
        word: WordArgs,
    },
    /// Draw the tight lamination of a braid as SVG.
    Render {
        #[command(flatten)]
        word: WordArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the oracle-equivalence and property suites.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value = "right")]
        strategy: Strategy,
        /// Random words, braids and rewrite pairs per suite.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Automaticity experiments.
    Automatic {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "sync-left")]
        mode: Mode,
        #[arg(long, default_value_t = SearchBudget::default().max_radius)]
        max_radius: usize,
        #[arg(long, default_value_t = SearchBudget::default().max_elements)]
        max_elements: usize,
        #[arg(long, default_value_t = SearchBudget::default().max_states)]
        max_states: usize,
        /// Also check the four-strand counterexample families up to this k.
        #[arg(long)]
        families: Option<usize>,
        /// Also scan prefix-length offsets over this many random braids.
        #[arg(long)]
        offsets: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum AutomatonCommand {
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        minimize: bool,
        #[arg(long, value_enum, default_value_t = VariantArg::Right)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Label states with their extended shadows.
        #[arg(long)]
        labels: bool,
        #[arg(long, default_value_t = braidlam::automaton::build::DEFAULT_BUDGET)]
        budget: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct WordArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    alphabet: Option<Alphabet>,
    #[arg(allow_hyphen_values = true)]
    word: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Alphabet {
    Artin,
    Sliding,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Right,
    SimpleRight,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::TooFewStrands(_)
            | Error::GeneratorOutOfRange { .. }
            | Error::BadLetter { .. }
            | Error::StrandMismatch(..)
            | Error::NotRightOriented(_)
            | Error::AlphabetMismatch
            | Error::Malformed(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

/// Sliding tokens start with a letter; anything else is read as Artin.
fn parse_word(n: usize, text: &str, alphabet: Option<Alphabet>) -> Result<ArtinWord, Failure> {
    let sliding = match alphabet {
        Some(Alphabet::Sliding) => true,
        Some(Alphabet::Artin) => false,
        None => text
            .trim_start()
            .starts_with(|c: char| c.is_ascii_alphabetic()),
    };
    Ok(if sliding {
        SlidingWord::parse(n, text)?.to_artin()
    } else {
        ArtinWord::parse(n, text)?
    })
}

fn write_out(path: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn normalize(word: &WordArgs, strategy: Strategy, show_trace: bool) -> Outcome {
    let w = parse_word(word.n, &word.word, word.alphabet)?;
    let v = rnf_with(&w, strategy)?;
    if !v.is_empty() {
        println!("{v}");
    }
    if show_trace {
        let t = trace(&w, strategy)?;
        println!("artin: {}", v.to_artin());
        let norms: Vec<String> = t.norms.iter().map(|x| x.to_string()).collect();
        println!("norms: {}", norms.join(" "));
    }
    Ok(true)
}

fn build(
    n: usize,
    minimize: bool,
    variant: VariantArg,
    labels: bool,
    budget: usize,
) -> Result<NormalFormDfa, Failure> {
    let variant = match variant {
        VariantArg::Right => Variant::Right,
        VariantArg::SimpleRight => Variant::SimpleRight,
    };
    let a = build_automaton_with(
        n,
        BuildOptions {
            variant,
            budget,
            labels,
        },
    )?;
    Ok(if minimize { a.minimize() } else { a })
}

fn accepts(path: &PathBuf, word: &str) -> Outcome {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let dfa = NormalFormDfa::from_json(&text)?;
    let v = SlidingWord::parse(dfa.n, word)?;
    Ok(dfa.accepts(&v.letters)?)
}

fn classify(word: &WordArgs) -> Outcome {
    let w = parse_word(word.n, &word.word, word.alphabet)?;
    let g = classify_geometric(&w)?;
    let s = classify_syntactic(&rnf_with(&w, Strategy::Right)?)?;
    println!("{g}");
    println!("{s}");
    if g != s {
        return Err(Failure::Internal(format!(
            "geometric {g} and syntactic {s} disagree"
        )));
    }
    Ok(true)
}

fn report(name: &str, bad: usize, total: usize) -> bool {
    let tag = if bad == 0 { "PASS" } else { "FAIL" };
    println!("{tag} {name}: {bad} discrepancies in {total}");
    bad == 0
}

fn verify(n: usize, max_len: usize, strategy: Strategy, samples: usize, seed: u64) -> Outcome {
    let variant = match strategy {
        Strategy::Right => Variant::Right,
        Strategy::SimpleRight => Variant::SimpleRight,
        other => return Err(Failure::Usage(format!("no automaton for strategy {other}"))),
    };
    let dfa = build_automaton_with(
        n,
        BuildOptions {
            variant,
            ..Default::default()
        },
    )?;
    let min = dfa.minimize();
    println!("automaton states: {}", dfa.states());
    println!("minimized states: {}", min.states());
    let mut ok = true;

    let mut words = right_words(n, max_len);
    words.extend(random_right_words(n, samples, 2 * max_len, seed));
    let bad = oracle_discrepancies(&min, strategy, &words)?;
    ok &= report("oracle equivalence", bad.len(), words.len());
    ok &= report(
        "minimization preserves language",
        !dfa.language_equal(&min)? as usize,
        1,
    );

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let braids: Vec<ArtinWord> = (0..samples)
        .map(|_| {
            let len = rng.gen_range(0..=12);
            random_word_with(n, len, &mut rng)
        })
        .collect();
    let mut dec_bad = 0;
    let mut comp_bad = 0;
    let mut pairs = 0;
    for b in &braids {
        let c = check_transitions(b, variant)?;
        pairs += c.pairs;
        dec_bad += c.dec_mismatches.len();
        comp_bad += c.comp_mismatches.len();
    }
    ok &= report("dec", dec_bad, pairs);
    ok &= report("comp", comp_bad, pairs);

    let mut violations = 0;
    for b in &braids {
        violations += relaxation_violations(b)?.len();
    }
    ok &= report("relaxation invariants", violations, braids.len());

    let pairs: Vec<(ArtinWord, ArtinWord)> = braids
        .iter()
        .map(|b| (b.clone(), rewrite(b, 8, &mut rng)))
        .collect();
    ok &= report(
        "word problem",
        word_problem_discrepancies(&pairs)?.len(),
        pairs.len(),
    );
    if ok {
        Ok(true)
    } else {
        Err(Failure::Internal("verification failed".into()))
    }
}

fn automatic(
    n: usize,
    mode: Mode,
    budget: SearchBudget,
    families: Option<usize>,
    offsets: Option<usize>,
    json: bool,
) -> Outcome {
    let outcome = search_witness(n, mode, budget)?;
    let fam = families.map(family_checks).transpose()?;
    let off = offsets.map(|s| offset_scan(n, s, 16, 0)).transpose()?;
    if json {
        let doc = serde_json::json!({ "n": n, "mode": mode.to_string(), "search": outcome, "families": fam, "offsets": off });
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializable")
        );
    } else {
        match &outcome {
            SearchOutcome::Found {
                radius,
                ball_size,
                size,
                anchors,
                ..
            } => {
                println!("witness found: radius {radius}, ball {ball_size}, |T| = {size}");
                for a in anchors {
                    println!(
                        "  anchor {}: product {} states, reduced {} states",
                        a.anchor, a.product_states, a.reduced_states
                    );
                }
            }
            SearchOutcome::Exhausted {
                radius,
                size,
                frontier,
                reason,
            } => {
                println!("budget exhausted at radius {radius}: |T| = {size}, frontier {frontier}: {reason}");
            }
        }
        if let Some(f) = &fam {
            let tag = if f.passed() { "PASS" } else { "FAIL" };
            println!("{tag} families up to k = {}: {:?}", f.max_k, f.failures);
            println!("  divergence norms {:?}", f.divergence_norms);
            println!("  split norms {:?}", f.split_norms);
        }
        if let Some(o) = &off {
            println!(
                "max prefix offset over {} samples: {}",
                o.samples, o.max_offset
            );
        }
    }
    Ok(outcome.found() && fam.is_none_or(|f| f.passed()))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Normalize {
            word,
            strategy,
            trace,
        } => normalize(&word, strategy, trace),
        Command::Automaton {
            command:
                AutomatonCommand::Build {
                    n,
                    minimize,
                    variant,
                    format,
                    labels,
                    budget,
                    output,
                },
        } => {
            let a = build(n, minimize, variant, labels, budget)?;
            let text = match format {
                Format::Json => a.to_json() + "\n",
                Format::Dot => a.to_dot(),
            };
            write_out(&output, &text)?;
            eprintln!("{} states", a.states());
            Ok(true)
        }
        Command::Accepts { automaton, word } => accepts(&automaton, &word),
        Command::Equal {
            n,
            alphabet,
            first,
            second,
        } => {
            let (a, b) = (
                parse_word(n, &first, alphabet)?,
                parse_word(n, &second, alphabet)?,
            );
            let eq = braidlam::relax::braid_equal(&a, &b)?;
            println!("{}", if eq { "equal" } else { "different" });
            Ok(eq)
        }
        Command::Order {
            n,
            alphabet,
            first,
            second,
        } => {
            let (a, b) = (
                parse_word(n, &first, alphabet)?,
                parse_word(n, &second, alphabet)?,
            );
            let word = match dehornoy_cmp(&a, &b)? {
                std::cmp::Ordering::Less => "LESS",
                std::cmp::Ordering::Equal => "EQUAL",
                std::cmp::Ordering::Greater => "GREATER",
            };
            println!("{word}");
            Ok(true)
        }
        Command::Classify { word } => classify(&word),
        Command::Render { word, output } => {
            let w = parse_word(word.n, &word.word, word.alphabet)?;
            write_out(&output, &Lamination::of_word(&w)?.to_svg())?;
            Ok(true)
        }
        Command::Verify {
            n,
            max_len,
            strategy,
            samples,
            seed,
        } => verify(n, max_len, strategy, samples, seed),
        Command::Automatic {
            n,
            mode,
            max_radius,
            max_elements,
            max_states,
            families,
            offsets,
            json,
        } => automatic(
            n,
            mode,
            SearchBudget {
                max_radius,
                max_elements,
                max_states,
            },
            families,
            offsets,
            json,
        ),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(3)
        }
    }
}
