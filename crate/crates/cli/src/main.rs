//! `cgt`: command-line front end for the combinatorial game engine.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cgt_core::dayset::{enumerate_values, DayStore};
use cgt_core::verify::{self, Suite};
use cgt_core::{
    best_nim_move, best_number_move, nim_sum, Arena, BirthdayMode, BrgString, Dyadic, Player,
    TemperatureClass,
};

#[derive(Parser)]
#[command(
    name = "cgt",
    version,
    about = "Evaluate and analyse short partizan games"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical value, outcome, birthday and temperature class.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Canonical value.
    Canon {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Birthday of the canonical form.
    Birthday {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Outcome class: L, R, P or N.
    Outcome {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Left and right stops.
    Stops {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Compare two games: <, >, = or ∥.
    Cmp {
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(allow_hyphen_values = true)]
        h: String,
    },
    /// Right distance to a nimber or better.
    Rd {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Left distance to a nimber or better.
    Ld {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Ways of writing a game as a sum of two earlier-born games.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Only decompositions whose birthdays add up.
        #[arg(long)]
        strong: bool,
        /// Day-set file to search instead of enumerating.
        #[arg(long, value_name = "FILE")]
        dayset_cache: Option<PathBuf>,
        /// Measure against the birthday of the form as written.
        #[arg(long)]
        form_birthday: bool,
    },
    /// List every value born by a day, in cache format.
    Enumerate {
        day: u32,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Nim-sum of two heap sizes.
    Nimsum { a: u32, b: u32 },
    /// Winning move in nim: heap index and new size.
    Nimmove {
        #[arg(required = true)]
        heaps: Vec<u32>,
    },
    /// Component to play in a sum of numbers: `nummove <d>... --player L|R`.
    Nummove {
        /// Numbers such as -3/2; `--player` may appear anywhere.
        #[arg(required = true, allow_hyphen_values = true, num_args = 1..)]
        args: Vec<String>,
        #[arg(long)]
        player: Option<Player>,
    },
    /// Value and birthday of a blue-red-green string, bottom edge first.
    Hackenbush { string: String },
    /// Run a self-check suite.
    Verify {
        /// birthdays, daysets, numbers, nimbers, distance, stops,
        /// starsystems, hackenbush or all.
        suite: String,
    },
}

fn class_name(class: TemperatureClass) -> &'static str {
    match class {
        TemperatureClass::Cold => "cold",
        TemperatureClass::Tepid {
            infinitesimal: true,
        } => "tepid (infinitesimal)",
        TemperatureClass::Tepid {
            infinitesimal: false,
        } => "tepid",
        TemperatureClass::Hot => "hot",
    }
}

/// Hyphen-leading numbers make clap swallow a trailing `--player`, so it is
/// also recognized among the positional arguments.
fn split_player(args: Vec<String>, flag: Option<Player>) -> Result<(Vec<String>, Player), String> {
    let mut numbers = Vec::new();
    let mut player = flag;
    let mut it = args.into_iter();
    while let Some(arg) = it.next() {
        let value = if arg == "--player" {
            it.next().ok_or("--player needs a value")?
        } else if let Some(v) = arg.strip_prefix("--player=") {
            v.to_string()
        } else {
            numbers.push(arg);
            continue;
        };
        player = Some(value.parse().map_err(|e| format!("{e}"))?);
    }
    if numbers.is_empty() {
        return Err("no numbers given".into());
    }
    Ok((numbers, player.ok_or("missing --player L|R")?))
}

fn run(command: Command) -> Result<ExitCode, String> {
    let mut a = Arena::new();
    let err = |e: cgt_core::Error| e.to_string();
    match command {
        Command::Eval { expr } => {
            let g = a.parse(&expr).map_err(err)?;
            println!("value: {}", a.print(g));
            println!("outcome: {}", a.outcome(g).symbol());
            println!("birthday: {}", a.value_birthday(g));
            println!("class: {}", class_name(a.classify(g)));
        }
        Command::Canon { expr } => {
            let g = a.parse(&expr).map_err(err)?;
            println!("{}", a.print(g));
        }
        Command::Birthday { expr } => {
            let g = a.parse(&expr).map_err(err)?;
            println!("{}", a.value_birthday(g));
        }
        Command::Outcome { expr } => {
            let g = a.parse(&expr).map_err(err)?;
            println!("{}", a.outcome(g).symbol());
        }
        Command::Stops { expr } => {
            let g = a.parse(&expr).map_err(err)?;
            println!("left: {}", a.left_stop(g));
            println!("right: {}", a.right_stop(g));
        }
        Command::Cmp { g, h } => {
            let g = a.parse(&g).map_err(err)?;
            let h = a.parse(&h).map_err(err)?;
            let symbol = match a.compare(g, h) {
                Some(std::cmp::Ordering::Less) => "<",
                Some(std::cmp::Ordering::Greater) => ">",
                Some(std::cmp::Ordering::Equal) => "=",
                None => "∥",
            };
            println!("{symbol}");
        }
        Command::Rd { expr } => {
            let g = a.parse(&expr).map_err(err)?;
            println!("{}", a.rd(g));
        }
        Command::Ld { expr } => {
            let g = a.parse(&expr).map_err(err)?;
            println!("{}", a.ld(g));
        }
        Command::Decompose {
            expr,
            strong,
            dayset_cache,
            form_birthday,
        } => {
            let g = a.parse(&expr).map_err(err)?;
            let mut days = DayStore::from_env();
            if let Some(path) = dayset_cache {
                days.load_file(&mut a, &path).map_err(err)?;
            }
            let mode = if form_birthday {
                BirthdayMode::Form
            } else {
                BirthdayMode::Value
            };
            let pairs = a.decompose_with(g, &mut days, mode).map_err(err)?;
            let mut shown = 0;
            for p in pairs.into_iter().filter(|p| p.strong || !strong) {
                let tag = if p.strong { " (strong)" } else { "" };
                println!("{} + {}{tag}", a.print(p.h), a.print(p.j));
                shown += 1;
            }
            if shown == 0 {
                println!("none");
            }
        }
        Command::Enumerate { day, out } => {
            let mut days = DayStore::from_env();
            let set = match days.get(&mut a, day) {
                Ok(set) => set.clone(),
                Err(_) => enumerate_values(&mut a, day).map_err(err)?,
            };
            let text = set.to_cache_string(&a);
            match out {
                Some(path) => {
                    fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?
                }
                None => print!("{text}"),
            }
        }
        Command::Nimsum { a: x, b: y } => println!("{}", nim_sum(x, y)),
        Command::Nimmove { heaps } => match best_nim_move(&heaps) {
            Some((i, size)) => println!("{i} {size}"),
            None => println!("none"),
        },
        Command::Nummove { args, player } => {
            let (numbers, player) = split_player(args, player)?;
            let xs = numbers
                .iter()
                .map(|s| s.parse::<Dyadic>().map_err(|e| format!("`{s}`: {e}")))
                .collect::<Result<Vec<_>, _>>()?;
            println!("{}", best_number_move(&xs, player).map_err(err)?);
        }
        Command::Hackenbush { string } => {
            let s: BrgString = string.parse().map_err(err)?;
            let g = a.string_value(&s);
            println!("value: {}", a.print(g));
            println!("birthday: {}", a.string_birthday(&s));
        }
        Command::Verify { suite } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            let mut days = DayStore::from_env();
            let mut ok = true;
            for s in suites {
                let report = verify::run(s, &mut a, &mut days).map_err(err)?;
                print!("{report}");
                ok &= report.passed();
            }
            println!("{}", if ok { "all checks passed" } else { "FAILED" });
            if !ok {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
