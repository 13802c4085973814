//! `fibtile`: count, enumerate, map, verify, and render the Fibonacci
//! colored composition families and their partner objects.

mod bfile;
mod render;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use fibtile_core::colorings::{self, ColorScheme, ColoredComposition};
use fibtile_core::comp::{self, Composition, RestrictedFamily};
use fibtile_core::ladder::{self, LadderSpanningTree};
use fibtile_core::multicomp::{self, TwoComposition};
use fibtile_core::ocps::{self, CommaSlashString, Ocps};
use fibtile_core::partitions::{self, SetPartition, TotallyNestedPartition};
use fibtile_core::series::{invert_transform, rational_coeffs, CoeffSeq};
use fibtile_core::unimodal::{self, UnimodalSeq};
use fibtile_core::verify;
use fibtile_core::words::{self, Word, WordConstraint};
use fibtile_core::Board;

#[derive(Parser)]
#[command(
    name = "fibtile",
    version,
    about = "Fibonacci colored compositions: counting, enumeration, bijections, rendering",
    after_help = "The FIBTILE_SEED environment variable is reserved; every algorithm here is \
                  deterministic, so it is currently ignored."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Ascii,
    Svg,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Print counting tables for the colored or restricted families.
    Count {
        /// Coloring scheme (fib-plus1, fib, fib-minus1, fib-even, fib-odd).
        #[arg(long)]
        scheme: Option<String>,
        /// Restricted family (one-two, odd, greater-than-one).
        #[arg(long, conflicts_with = "scheme")]
        family: Option<String>,
        /// Single n to count.
        #[arg(long)]
        n: Option<usize>,
        /// Count every n from 1 to this bound.
        #[arg(long, conflicts_with = "n")]
        max_n: Option<usize>,
        /// Cross-check the table against a local OEIS b-file.
        #[arg(long)]
        oeis_bfile: Option<PathBuf>,
        /// Index shift applied when looking rows up in the b-file.
        #[arg(long, default_value_t = 0)]
        oeis_offset: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Stream objects of a family as newline-delimited JSON.
    Enumerate {
        #[arg(long)]
        scheme: Option<String>,
        #[arg(long)]
        family: Option<String>,
        /// Other object kinds: trees, ncn-indecomposable, totally-nested,
        /// partitions, unimodal, ocps, words, two-comp.
        #[arg(long)]
        object: Option<String>,
        #[arg(long)]
        n: usize,
        /// Word constraint, for `--object words`.
        #[arg(long)]
        constraint: Option<String>,
    },
    /// Apply one bijection to one object.
    Map {
        /// Bijection name; see `fibtile map --bijection help`.
        #[arg(long)]
        bijection: String,
        /// Input object; read from stdin when omitted.
        #[arg(long)]
        input: Option<String>,
        /// Scheme context for word inputs.
        #[arg(long)]
        scheme: Option<String>,
        /// Family context for 2-composition inputs.
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the exhaustive cross-check suite.
    Verify {
        /// Cap on the exhaustive ranges (each check also has its own cap).
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Draw a board, arc diagram, or spanning tree.
    Render {
        /// Input object (JSON, or compact partition text); stdin if omitted.
        #[arg(long)]
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Force the input kind: board, colored, tree, partition.
        #[arg(long)]
        kind: Option<String>,
        /// Scheme used when rendering a colored composition.
        #[arg(long)]
        scheme: Option<String>,
    },
    /// Print color-count series and their INVERT transforms.
    Series {
        /// Scheme whose color counts seed the series.
        #[arg(long)]
        scheme: Option<String>,
        /// Explicit seed coefficients, comma separated (w_1,w_2,...).
        #[arg(long, conflicts_with = "scheme")]
        coeffs: Option<String>,
        /// Rational numerator coefficients (constant term first).
        #[arg(long, requires = "denom", conflicts_with_all = ["scheme", "coeffs"])]
        numer: Option<String>,
        /// Rational denominator coefficients (constant term first).
        #[arg(long)]
        denom: Option<String>,
        #[arg(long, default_value_t = 20)]
        max_n: usize,
        /// `json` emits bare coefficient arrays (index 1 first).
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Count {
            scheme,
            family,
            n,
            max_n,
            oeis_bfile,
            oeis_offset,
            format,
        } => cmd_count(scheme, family, n, max_n, oeis_bfile, oeis_offset, format),
        Command::Enumerate {
            scheme,
            family,
            object,
            n,
            constraint,
        } => cmd_enumerate(scheme, family, object, n, constraint),
        Command::Map {
            bijection,
            input,
            scheme,
            family,
            format,
        } => cmd_map(&bijection, input, scheme, family, format),
        Command::Verify { max_n } => cmd_verify(max_n),
        Command::Render {
            input,
            format,
            kind,
            scheme,
        } => cmd_render(input, format, kind, scheme),
        Command::Series {
            scheme,
            coeffs,
            numer,
            denom,
            max_n,
            format,
        } => cmd_series(scheme, coeffs, numer, denom, max_n, format),
    }
}

fn parse_scheme(s: &str) -> Result<ColorScheme> {
    ColorScheme::parse(s).ok_or_else(|| anyhow!("unknown scheme {s:?}"))
}

fn parse_family(s: &str) -> Result<RestrictedFamily> {
    RestrictedFamily::parse(s).ok_or_else(|| anyhow!("unknown family {s:?}"))
}

fn read_input(input: Option<String>) -> Result<String> {
    match input {
        Some(s) => Ok(s),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .context("reading stdin")?;
            Ok(buf)
        }
    }
}

fn cmd_count(
    scheme: Option<String>,
    family: Option<String>,
    n: Option<usize>,
    max_n: Option<usize>,
    oeis_bfile: Option<PathBuf>,
    oeis_offset: i64,
    format: Format,
) -> Result<ExitCode> {
    let out = std::io::stdout();
    let mut out = out.lock();
    let single = n;
    let hi = single.or(max_n).unwrap_or(10);
    let lo = if single.is_some() { hi } else { 1 };
    if hi == 0 {
        bail!("n must be positive");
    }

    let columns: Vec<(String, Vec<String>)> = if let Some(name) = family {
        let family = parse_family(&name)?;
        let values = (lo..=hi)
            .map(|n| comp::enumerate_family(family, n).len().to_string())
            .collect();
        vec![(name, values)]
    } else if let Some(name) = scheme {
        let scheme = parse_scheme(&name)?;
        let counts = colorings::counts_colored(scheme, hi);
        let values = (lo..=hi).map(|n| counts[n - 1].to_string()).collect();
        vec![(name, values)]
    } else {
        ColorScheme::ALL
            .into_iter()
            .map(|scheme| {
                let counts = colorings::counts_colored(scheme, hi);
                let values = (lo..=hi).map(|n| counts[n - 1].to_string()).collect();
                (scheme.name().to_string(), values)
            })
            .collect()
    };

    let mut mismatches = 0usize;
    let bfile = oeis_bfile.as_deref().map(bfile::parse_bfile).transpose()?;

    match format {
        Format::Json => {
            let mut table = serde_json::Map::new();
            for (name, values) in &columns {
                table.insert(
                    name.clone(),
                    serde_json::Value::Array(
                        values
                            .iter()
                            .map(|v| serde_json::Value::String(v.clone()))
                            .collect(),
                    ),
                );
            }
            writeln!(out, "{}", serde_json::Value::Object(table))?;
        }
        _ if single.is_some() && columns.len() == 1 => {
            writeln!(out, "{}", columns[0].1[0])?;
        }
        _ => {
            let header: Vec<&str> = columns.iter().map(|(name, _)| name.as_str()).collect();
            writeln!(out, "n\t{}", header.join("\t"))?;
            for (row, n) in (lo..=hi).enumerate() {
                let cells: Vec<&str> = columns.iter().map(|(_, v)| v[row].as_str()).collect();
                writeln!(out, "{n}\t{}", cells.join("\t"))?;
            }
        }
    }

    if let Some(reference) = bfile {
        if columns.len() != 1 {
            bail!("--oeis-bfile needs a single --scheme or --family column");
        }
        for (row, n) in (lo..=hi).enumerate() {
            let idx = n as i64 + oeis_offset;
            match reference.get(&idx) {
                None => writeln!(out, "b-file: no entry for index {idx}, skipped")?,
                Some(expected) if *expected == columns[0].1[row] => {}
                Some(expected) => {
                    mismatches += 1;
                    writeln!(
                        out,
                        "b-file MISMATCH at n={n}: ours {} vs b-file {expected}",
                        columns[0].1[row]
                    )?;
                }
            }
        }
        if mismatches == 0 {
            writeln!(out, "b-file: all overlapping entries match")?;
        }
    }
    Ok(if mismatches > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_enumerate(
    scheme: Option<String>,
    family: Option<String>,
    object: Option<String>,
    n: usize,
    constraint: Option<String>,
) -> Result<ExitCode> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut emit = |value: serde_json::Value| -> Result<()> {
        writeln!(out, "{value}")?;
        Ok(())
    };
    match (scheme, family, object.as_deref()) {
        (Some(name), None, None) => {
            let scheme = parse_scheme(&name)?;
            for cc in colorings::enumerate_colored(scheme, n) {
                emit(serde_json::to_value(&cc)?)?;
            }
        }
        (None, Some(name), None) => {
            let family = parse_family(&name)?;
            for c in comp::enumerate_family(family, n) {
                emit(serde_json::to_value(&c)?)?;
            }
        }
        (None, family, Some(object)) => match object {
            "trees" => {
                for t in ladder::enumerate_trees(n)? {
                    emit(serde_json::to_value(&t)?)?;
                }
            }
            "partitions" => {
                for p in partitions::enumerate_partitions(n) {
                    emit(serde_json::to_value(&p)?)?;
                }
            }
            "ncn-indecomposable" => {
                for p in partitions::enumerate_ncn_indecomposable(n) {
                    emit(serde_json::to_value(&p)?)?;
                }
            }
            "totally-nested" => {
                for t in partitions::enumerate_totally_nested(n) {
                    emit(serde_json::to_value(&t)?)?;
                }
            }
            "unimodal" => {
                for u in unimodal::enumerate_unimodal(n) {
                    emit(serde_json::to_value(&u)?)?;
                }
            }
            "ocps" => {
                for o in ocps::enumerate_ocps(n)? {
                    emit(serde_json::to_value(&o)?)?;
                }
            }
            "words" => {
                let name = constraint.ok_or_else(|| anyhow!("--object words needs --constraint"))?;
                let constraint = WordConstraint::parse(&name)
                    .ok_or_else(|| anyhow!("unknown constraint {name:?}"))?;
                for w in words::enumerate_words(constraint, n) {
                    emit(serde_json::Value::String(w.to_string()))?;
                }
            }
            "two-comp" => {
                let name = family.ok_or_else(|| anyhow!("--object two-comp needs --family"))?;
                let family = parse_family(&name)?;
                for tc in multicomp::enumerate_2comp(family, n) {
                    emit(serde_json::to_value(&tc)?)?;
                }
            }
            other => bail!("unknown object kind {other:?}"),
        },
        _ => bail!("pick exactly one of --scheme, --family, or --object"),
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_partition(text: &str) -> Result<SetPartition> {
    let text = text.trim();
    if text.starts_with('[') {
        Ok(serde_json::from_str(text)?)
    } else {
        Ok(SetPartition::parse(text)?)
    }
}

fn parse_nested(text: &str) -> Result<TotallyNestedPartition> {
    Ok(TotallyNestedPartition::new(parse_partition(text)?)?)
}

fn parse_usize_array(text: &str) -> Result<Vec<usize>> {
    Ok(serde_json::from_str(text.trim())?)
}

fn cmd_map(
    bijection: &str,
    input: Option<String>,
    scheme: Option<String>,
    family: Option<String>,
    format: Format,
) -> Result<ExitCode> {
    if bijection == "help" {
        println!("{}", BIJECTION_HELP.trim_end());
        return Ok(ExitCode::SUCCESS);
    }
    let text = read_input(input)?;
    let text = text.trim();
    let json = format == Format::Json;

    let composition = |t: &str| -> Result<Composition> {
        Ok(Composition::new(parse_usize_array(t)?)?)
    };
    let colored = |t: &str| -> Result<ColoredComposition> { Ok(serde_json::from_str(t)?) };
    let print_value = |v: serde_json::Value| -> Result<ExitCode> {
        println!("{v}");
        Ok(ExitCode::SUCCESS)
    };
    let print_text = |s: String| -> Result<ExitCode> {
        println!("{s}");
        Ok(ExitCode::SUCCESS)
    };

    match bijection {
        "alpha" => print_value(serde_json::to_value(comp::alpha(&composition(text)?)?)?),
        "alpha-inv" => print_value(serde_json::to_value(comp::alpha_inv(&composition(text)?)?)?),
        "beta" => print_value(serde_json::to_value(comp::beta(&composition(text)?)?)?),
        "beta-inv" => print_value(serde_json::to_value(comp::beta_inv(&composition(text)?)?)?),
        "word" => {
            let w = words::colored_to_word(&colored(text)?)?;
            if json {
                print_value(serde_json::Value::String(w.to_string()))
            } else {
                print_text(w.to_string())
            }
        }
        "word-inv" => {
            let name = scheme.ok_or_else(|| anyhow!("word-inv needs --scheme"))?;
            let scheme = parse_scheme(&name)?;
            let alphabet = words::scheme_constraint(scheme)
                .map(WordConstraint::alphabet)
                .unwrap_or(3);
            let w = Word::parse(text, alphabet)?;
            print_value(serde_json::to_value(words::word_to_colored(&w, scheme)?)?)
        }
        "ending-odd" => print_value(serde_json::to_value(words::jacobsthal_comp_a(&colored(
            text,
        )?)?)?),
        "ending-odd-inv" => print_value(serde_json::to_value(words::jacobsthal_comp_a_inv(
            &composition(text)?,
        )?)?),
        "ending-even" => print_value(serde_json::to_value(words::jacobsthal_comp_b(
            &composition(text)?,
        )?)?),
        "ending-even-inv" => print_value(serde_json::to_value(words::jacobsthal_comp_b_inv(
            &composition(text)?,
        )?)?),
        "paired-word" => print_text(words::jacobsthal_word_c(&colored(text)?)?.to_string()),
        "paired-word-inv" => {
            let w = Word::parse(text, 3)?;
            print_value(serde_json::to_value(words::jacobsthal_word_c_inv(&w)?)?)
        }
        "sparse-word" => print_text(words::jacobsthal_word_d(&colored(text)?)?.to_string()),
        "sparse-word-inv" => {
            let w = Word::parse(text, 3)?;
            print_value(serde_json::to_value(words::jacobsthal_word_d_inv(&w)?)?)
        }
        "tree" => print_value(serde_json::to_value(ladder::colored_to_tree(&colored(
            text,
        )?)?)?),
        "tree-inv" => {
            let t: LadderSpanningTree = serde_json::from_str(text)?;
            print_value(serde_json::to_value(ladder::tree_to_colored(&t)?)?)
        }
        "phi" => {
            let img = partitions::phi(&parse_partition(text)?)?;
            if json {
                print_value(serde_json::to_value(&img)?)
            } else {
                print_text(img.to_string())
            }
        }
        "phi-inv" => {
            let img = partitions::phi_inv(&parse_nested(text)?);
            if json {
                print_value(serde_json::to_value(&img)?)
            } else {
                print_text(img.to_string())
            }
        }
        "psi" => print_value(serde_json::to_value(unimodal::psi(&parse_nested(text)?))?),
        "psi-inv" => {
            let u = UnimodalSeq::new(parse_usize_array(text)?)?;
            let t = unimodal::psi_inv(&u)?;
            if json {
                print_value(serde_json::to_value(&t)?)
            } else {
                print_text(t.to_string())
            }
        }
        "xi" => print_text(ocps::xi(&parse_nested(text)?).to_text()),
        "xi-inv" => {
            let s = CommaSlashString::parse(text)?;
            let t = ocps::xi_inv(&s)?;
            if json {
                print_value(serde_json::to_value(&t)?)
            } else {
                print_text(t.to_string())
            }
        }
        "unimodal" => print_value(serde_json::to_value(unimodal::colored_to_unimodal(
            &colored(text)?,
        )?)?),
        "unimodal-inv" => {
            let u = UnimodalSeq::new(parse_usize_array(text)?)?;
            print_value(serde_json::to_value(unimodal::unimodal_to_colored(&u)?)?)
        }
        "ocps" => print_value(serde_json::to_value(ocps::colored_to_ocps(&colored(
            text,
        )?)?)?),
        "ocps-inv" => {
            let o: Ocps = serde_json::from_str(text)?;
            print_value(serde_json::to_value(ocps::colored_from_ocps(&o)?)?)
        }
        "ocps-encode" => {
            let o: Ocps = serde_json::from_str(text)?;
            print_text(ocps::ocps_encode(&o).to_text())
        }
        "ocps-decode" => {
            let s = CommaSlashString::parse(text)?;
            print_value(serde_json::to_value(ocps::ocps_decode(&s)?)?)
        }
        "two-comp" => {
            let cc = colored(text)?;
            let family = match family {
                Some(name) => parse_family(&name)?,
                None => match cc.scheme() {
                    ColorScheme::FibPlus1 => RestrictedFamily::OneTwo,
                    ColorScheme::Fib => RestrictedFamily::Odd,
                    ColorScheme::FibMinus1 => RestrictedFamily::GreaterThanOne,
                    other => bail!("scheme {other} has no 2-composition pairing"),
                },
            };
            print_value(serde_json::to_value(multicomp::colored_to_2comp(
                &cc, family,
            )?)?)
        }
        "two-comp-inv" => {
            let name = family.ok_or_else(|| anyhow!("two-comp-inv needs --family"))?;
            let family = parse_family(&name)?;
            let pairs: Vec<(usize, u8)> = serde_json::from_str(text)?;
            let tc = TwoComposition::from_pairs(family, pairs)?;
            print_value(serde_json::to_value(multicomp::colored_from_2comp(&tc)?)?)
        }
        other => bail!("unknown bijection {other:?}; try `--bijection help`"),
    }
}

const BIJECTION_HELP: &str = r#"
alpha / alpha-inv            {1,2}-composition <-> odd composition of n+1
beta / beta-inv              odd composition <-> no-1 composition of n+1
word / word-inv              colored composition <-> restricted word (needs --scheme on inv)
ending-odd / ending-odd-inv  fib-minus1 colored <-> composition of n-1 ending odd
ending-even / -inv           composition ending odd <-> composition ending even
paired-word / -inv           fib-minus1 colored <-> ternary word, even 1/2 runs
sparse-word / -inv           fib-minus1 colored <-> ternary word, no adjacent nonzero
tree / tree-inv              fib-even colored <-> ladder spanning tree
phi / phi-inv                ncn indecomposable partition <-> totally nested partition
psi / psi-inv                totally nested partition <-> flat unimodal sequence
xi / xi-inv                  totally nested partition <-> comma-slash string
unimodal / unimodal-inv      fib-odd colored <-> unimodal sequence
ocps / ocps-inv              fib-odd colored <-> order-consecutive partition sequence
ocps-encode / ocps-decode    ordered block sequence <-> comma-slash string
two-comp / two-comp-inv      colored composition <-> 2-composition (needs --family on inv)
"#;

fn cmd_verify(max_n: usize) -> Result<ExitCode> {
    let reports = verify::run_all(max_n.max(1));
    let mut failed = 0usize;
    for r in &reports {
        if r.passed {
            println!("ok   {} (n <= {})", r.name, r.bound);
        } else {
            failed += 1;
            println!("FAIL {} (n <= {}): {}", r.name, r.bound, r.detail);
        }
    }
    println!(
        "{} checks, {} failed (exhaustive up to n = {})",
        reports.len(),
        failed,
        max_n
    );
    Ok(if failed > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_render(
    input: Option<String>,
    format: Format,
    kind: Option<String>,
    scheme: Option<String>,
) -> Result<ExitCode> {
    let text = read_input(input)?;
    let text = text.trim();

    enum Target {
        Board(Board),
        Tree(LadderSpanningTree),
        Partition(SetPartition),
    }

    let kind = match kind.as_deref() {
        Some(k) => k.to_string(),
        None => {
            // infer from the JSON shape
            if let Ok(value) = serde_json::from_str::<serde_json::Value>(text) {
                match &value {
                    serde_json::Value::Object(map) if map.contains_key("scheme") => {
                        "colored".into()
                    }
                    serde_json::Value::Object(map) if map.contains_key("edges") => "tree".into(),
                    serde_json::Value::Object(map) if map.contains_key("sep") => "board".into(),
                    serde_json::Value::Array(_) => "partition".into(),
                    _ => bail!("cannot infer input kind; pass --kind"),
                }
            } else {
                "partition".into()
            }
        }
    };

    let target = match kind.as_str() {
        "board" => Target::Board(serde_json::from_str(text)?),
        "colored" => {
            let cc: ColoredComposition = serde_json::from_str(text)?;
            Target::Board(colorings::to_board(&cc))
        }
        "tree" => Target::Tree(serde_json::from_str(text)?),
        "partition" => Target::Partition(parse_partition(text)?),
        other => {
            if scheme.is_some() {
                bail!("unknown render kind {other:?} (with --scheme, use kind `colored`)");
            }
            bail!("unknown render kind {other:?}");
        }
    };

    let drawing = match (target, format) {
        (Target::Board(b), Format::Ascii | Format::Text) => render::board_ascii(&b),
        (Target::Board(b), Format::Svg) => render::board_svg(&b),
        (Target::Tree(t), Format::Ascii | Format::Text) => render::tree_ascii(&t),
        (Target::Tree(t), Format::Dot) => t.to_dot(),
        (Target::Partition(p), Format::Ascii | Format::Text) => render::partition_ascii(&p),
        (Target::Partition(p), Format::Svg) => render::partition_svg(&p),
        (_, _) => bail!("unsupported kind/format combination"),
    };
    println!("{drawing}");
    Ok(ExitCode::SUCCESS)
}

fn parse_i64_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| anyhow!("bad coefficient {t:?}"))
        })
        .collect()
}

fn cmd_series(
    scheme: Option<String>,
    coeffs: Option<String>,
    numer: Option<String>,
    denom: Option<String>,
    max_n: usize,
    format: Format,
) -> Result<ExitCode> {
    if max_n == 0 {
        bail!("--max-n must be positive");
    }
    // JSON output is built textually so coefficients of any size stay bare
    // JSON integers (index 1 first).
    let json_array = |values: Vec<String>| format!("[{}]", values.join(","));
    let json = format == Format::Json;
    if let Some(name) = scheme {
        let scheme = parse_scheme(&name)?;
        let counts = colorings::counts_colored(scheme, max_n);
        let colors: Vec<String> = (1..=max_n)
            .map(|n| colorings::color_count(scheme, n).to_string())
            .collect();
        if json {
            println!(
                "{{\"colors\":{},\"counts\":{}}}",
                json_array(colors),
                json_array(counts.iter().map(|c| c.to_string()).collect())
            );
        } else {
            println!("n\tcolors(n)\tcount(n)");
            for n in 1..=max_n {
                println!("{n}\t{}\t{}", colors[n - 1], counts[n - 1]);
            }
        }
    } else if let Some(list) = coeffs {
        let seed = CoeffSeq::from_i64(&parse_i64_list(&list)?)?;
        let transformed = invert_transform(&seed);
        if json {
            let values = (1..=seed.len()).map(|n| transformed.get(n).to_string()).collect();
            println!("{}", json_array(values));
        } else {
            println!("n\tw(n)\tinvert(n)");
            for n in 1..=seed.len() {
                println!("{n}\t{}\t{}", seed.get(n), transformed.get(n));
            }
        }
    } else if let (Some(numer), Some(denom)) = (numer, denom) {
        let seq = rational_coeffs(
            &parse_i64_list(&numer)?,
            &parse_i64_list(&denom)?,
            max_n,
        )?;
        if json {
            let values = (1..=max_n).map(|n| seq.get(n).to_string()).collect();
            println!("{}", json_array(values));
        } else {
            println!("n\tcoeff(n)");
            for n in 1..=max_n {
                println!("{n}\t{}", seq.get(n));
            }
        }
    } else {
        bail!("pass --scheme, --coeffs, or --numer/--denom");
    }
    Ok(ExitCode::SUCCESS)
}
