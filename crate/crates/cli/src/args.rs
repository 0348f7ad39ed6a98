use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

#[derive(Debug, Parser)]
#[command(name = "vieta", version, about = "Vieta jumping, Pell conics and small norms, computed exactly")]
pub struct Cli {
    /// Emit one JSON record per line instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for scans (0 = available parallelism)
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    /// Also write the output to this file
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide solvability of x^2 - pxy + y^2 = q
    #[command(allow_negative_numbers = true)]
    Classify {
        #[arg(short)]
        p: BigInt,
        #[arg(short)]
        q: BigInt,
    },
    /// Descend from a point to a terminal and print the certificate
    #[command(allow_negative_numbers = true)]
    Descend {
        #[arg(short)]
        p: BigInt,
        #[arg(short)]
        q: BigInt,
        #[arg(short)]
        x: BigInt,
        #[arg(short)]
        y: BigInt,
    },
    /// Alternating sharp/flat chain through a point
    #[command(allow_negative_numbers = true)]
    Chain {
        #[arg(short)]
        p: BigInt,
        #[arg(short)]
        q: BigInt,
        #[arg(short)]
        x: BigInt,
        #[arg(short)]
        y: BigInt,
        #[arg(long, default_value_t = 3)]
        back: usize,
        #[arg(long, default_value_t = 3)]
        fwd: usize,
    },
    /// Certify that (a^2 + b^2)/(ab + 1) is a square
    #[command(allow_negative_numbers = true)]
    Imo {
        #[arg(short)]
        a: BigInt,
        #[arg(short)]
        b: BigInt,
    },
    /// Rational point on x^2 - m^2 xy + y^2 = m^2 (or on x^2 - 2xy - y^2 = 1 with --pell)
    #[command(allow_negative_numbers = true)]
    Param {
        #[arg(short, required_unless_present = "pell")]
        m: Option<BigInt>,
        /// Slope as n, n/d or inf
        #[arg(short, allow_hyphen_values = true)]
        t: String,
        #[arg(long)]
        pell: bool,
    },
    /// Apply the unit action (x, y) -> (kx - y, x) j times on x^2 - kxy + y^2 = k
    #[command(allow_negative_numbers = true)]
    PellAct {
        #[arg(short)]
        k: BigInt,
        #[arg(short)]
        x: BigInt,
        #[arg(short)]
        y: BigInt,
        #[arg(short)]
        j: i64,
    },
    /// Reduce (u + v sqrt m)/d along its unit orbit
    #[command(allow_negative_numbers = true)]
    Reduce {
        #[arg(short)]
        m: BigInt,
        #[arg(short)]
        u: BigInt,
        #[arg(short)]
        v: BigInt,
        #[arg(short, long, default_value_t = 1)]
        d: u8,
        /// Use the delta-assisted reduction for m = n^2 + 2
        #[arg(long)]
        fourth_root: bool,
    },
    /// Shape forced on a small norm by the family theorems
    NormClassify {
        /// NsqMinus1, NsqMinus4 or NsqPlus2
        #[arg(long)]
        family: String,
        #[arg(short)]
        n: u64,
        #[arg(long)]
        nu: u64,
    },
    /// Exhaustive searches
    Scan {
        #[command(subcommand)]
        target: ScanTarget,
    },
    /// Regenerate the unit/point table for x^2 - 4xy + y^2 = 4
    Table1,
    /// Smallest non-square norms of x^2 - (t^2 - 1)y^2
    Davenport {
        #[arg(short)]
        t: u64,
    },
    /// Terms of a_{n+2} = m^2 a_{n+1} - a_n from 0, m
    #[command(allow_negative_numbers = true)]
    Recurrence {
        #[arg(short)]
        m: BigInt,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Sheared Pell form x^2 + 2cxy + (c^2 - m)y^2 = 1
    VietaForm {
        #[arg(short)]
        m: u64,
    },
    /// Closed-form unit of a Richaud-Degert family
    Unit {
        #[arg(long)]
        family: String,
        #[arg(short)]
        n: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum ScanTarget {
    /// Integral points with |x|, |y| <= bound
    #[command(allow_negative_numbers = true)]
    Box {
        #[arg(short)]
        p: BigInt,
        #[arg(short)]
        q: BigInt,
        #[arg(long)]
        bound: u64,
    },
    /// Pairs a <= b <= bound with ab + 1 | a^2 + b^2
    Imo {
        #[arg(long)]
        bound: u64,
    },
    /// Solvable |x^2 - my^2| = nu for nu <= bound
    Norm {
        #[arg(short)]
        m: u64,
        #[arg(long)]
        bound: u64,
    },
    /// Pairs x, y <= bound with 2xy + 1 | x^2 + 2y^2
    FinalProp {
        #[arg(long)]
        bound: u64,
    },
}
