#![allow(dead_code)]

use std::process::{Command, Output};

use outstanding_cli::record::{OutputRecord, Payload};

pub const BIN: &str = env!("CARGO_BIN_EXE_outstanding");

pub fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

pub enum Expect {
    Coeffs(&'static [&'static str]),
    Scalar(&'static str),
    Geom(&'static [&'static str], usize),
    Fields(&'static [(&'static str, &'static str)]),
}

pub struct Example {
    pub args: &'static str,
    pub expect: Expect,
}

const fn ex(args: &'static str, expect: Expect) -> Example {
    Example { args, expect }
}

use Expect::*;

pub const EXAMPLES: &[Example] = &[
    // multiset
    ex("multiset --stat strong --mult 2,1 --want gf", Coeffs(&["0/1", "1/1", "2/1"])),
    ex("multiset --stat strong --mult 1,1,1,1 --want gf", Coeffs(&["0/1", "6/1", "11/1", "6/1", "1/1"])),
    ex("multiset --stat strong --mult 3 --want gf", Coeffs(&["0/1", "1/1"])),
    ex("multiset --stat weak --mult 3 --want gf", Coeffs(&["0/1", "0/1", "0/1", "1/1"])),
    ex("multiset --stat weak --mult 2,1 --want gf", Coeffs(&["0/1", "1/1", "1/1", "1/1"])),
    ex("multiset --stat weak --mult 1,1 --want gf", Coeffs(&["0/1", "1/1", "1/1"])),
    ex("multiset --stat strong --mult 2,1 --want mean", Scalar("5/3")),
    ex("multiset --stat strong --mult 3 --want mean", Scalar("1/1")),
    ex("multiset --stat strong --mult 1,1,1 --want mean", Scalar("11/6")),
    ex("multiset --stat strong --mult 1,1,1,1,1 --want mean", Scalar("137/60")),
    ex("multiset --stat weak --mult 2,1 --want mean", Scalar("2/1")),
    ex("multiset --stat weak --mult 3 --want mean", Scalar("3/1")),
    ex("multiset --stat weak --mult 1,1,1 --want mean", Scalar("11/6")),
    ex("multiset --mult 2,1 --want gap", Fields(&[("bound", "5/2"), ("gap", "1/3")])),
    ex("multiset --mult 1,1,1 --want gap", Fields(&[("bound", "0/1"), ("gap", "0/1")])),
    ex("multiset --mult 3 --want gap", Fields(&[("bound", "6/1"), ("gap", "2/1")])),
    ex("multiset --mult 2,1 --want darroch", Fields(&[("mean", "5/3"), ("mode", "2"), ("ok", "true")])),
    ex("multiset --mult 3 --want darroch", Fields(&[("mean", "1/1"), ("mode", "1"), ("ok", "true")])),
    ex("multiset --mult 1,1,1,1 --want darroch", Fields(&[("mean", "25/12"), ("mode", "2"), ("ok", "true")])),
    // words
    ex("words --stat strong --n 2 --k 2 --want gf", Coeffs(&["0/1", "3/1", "1/1"])),
    ex("words --stat strong --n 3 --k 2 --want gf", Coeffs(&["0/1", "5/1", "3/1"])),
    ex("words --stat strong --n 1 --k 4 --want gf", Coeffs(&["0/1", "4/1"])),
    ex("words --stat strong --n 4 --k 1 --want gf", Coeffs(&["0/1", "1/1"])),
    ex("words --stat strong --n 2 --k 2 --want mean", Scalar("5/4")),
    ex("words --stat strong --n 3 --k 2 --want mean", Scalar("11/8")),
    ex("words --stat strong --n 5 --k 1 --want mean", Scalar("1/1")),
    ex("words --stat weak --n 2 --k 2 --want gf", Coeffs(&["0/1", "1/1", "3/1"])),
    ex("words --stat weak --n 3 --k 2 --want gf", Coeffs(&["0/1", "1/1", "3/1", "4/1"])),
    ex("words --stat weak --n 4 --k 1 --want gf", Coeffs(&["0/1", "0/1", "0/1", "0/1", "1/1"])),
    ex("words --stat weak --n 3 --k 2 --want mean", Scalar("19/8")),
    ex("words --stat weak --n 2 --k 2 --want mean", Scalar("7/4")),
    ex("words --stat weak --n 4 --k 1 --want mean", Scalar("4/1")),
    // templates
    ex("template --kind perm --tau YN*YY --want prob", Scalar("1/40")),
    ex("template --kind perm --tau *** --want prob", Scalar("1/1")),
    ex("template --kind perm --tau N --want prob", Scalar("0/1")),
    ex("template --kind perm --tau YN*YY --n 5 --want count", Scalar("3/1")),
    ex("template --kind perm --tau Y --n 3 --want count", Scalar("6/1")),
    ex("template --kind perm --tau YY --n 3 --want count", Scalar("3/1")),
    ex("template --kind word --tau S*s --want gf", Geom(&["0/1", "1/1", "3/1"], 4)),
    ex("template --kind word --tau S --want gf", Geom(&["0/1", "1/1"], 2)),
    ex("template --kind word --tau S*s --k 2 --want count", Scalar("7/1")),
    ex("template --kind word --tau S*s --k 3 --want count", Scalar("22/1")),
    ex("template --kind word --tau S*s --k 4 --want count", Scalar("50/1")),
    ex("template --kind word --tau S --k 5 --want count", Scalar("5/1")),
    ex("template --kind word --tau W --k 1 --want count", Scalar("1/1")),
    ex("template --kind word --tau s --k 4 --want count", Scalar("0/1")),
    ex("template --kind word --tau o --k 5 --want count", Scalar("0/1")),
    // oracle
    ex("oracle --stat strong --mult 2,1", Coeffs(&["0/1", "1/1", "2/1"])),
    ex("oracle --stat strong --mult 3", Coeffs(&["0/1", "1/1"])),
    ex("oracle --stat weak --n 2 --k 2", Coeffs(&["0/1", "1/1", "3/1"])),
    ex("oracle --stat strong --kind perm --n 3", Coeffs(&["0/1", "2/1", "3/1", "1/1"])),
    ex("oracle --kind perm --tau YN*YY --n 5", Scalar("3/1")),
    ex("oracle --kind word --tau S*s --k 2", Scalar("7/1")),
    ex("oracle --kind word --tau So --k 3", Scalar("3/1")),
];

fn owned(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

impl Expect {
    pub fn matches(&self, payload: &Payload) -> bool {
        match (self, payload) {
            (Coeffs(c), Payload::Coefficients(got)) => *got == owned(c),
            (Scalar(s), Payload::Scalar(got)) => got == s,
            (Geom(c, r), Payload::GeomForm { numerator, pole_order }) => {
                *numerator == owned(c) && pole_order == r
            }
            (Fields(f), Payload::Fields(got)) => {
                got.len() == f.len() && f.iter().all(|(k, v)| got.get(*k).map(String::as_str) == Some(*v))
            }
            _ => false,
        }
    }
}

/// Runs one example in both formats; the two decoded records must agree and
/// match the expectation.
pub fn check(example: &Example) -> Result<(), String> {
    let args: Vec<&str> = example.args.split_whitespace().collect();
    let decode = |format: &str| -> Result<OutputRecord, String> {
        let mut full = args.clone();
        full.extend(["--format", format]);
        let out = run(&full);
        if !out.status.success() {
            return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
        }
        let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
        match format {
            "json" => OutputRecord::from_json(&text),
            _ => OutputRecord::from_tsv(&text),
        }
        .map_err(|e| format!("{format}: {e}"))
    };
    let json = decode("json")?;
    let tsv = decode("tsv")?;
    if json != tsv {
        return Err(format!("json and tsv disagree: {json:?} vs {tsv:?}"));
    }
    if !example.expect.matches(&json.payload) {
        return Err(format!("unexpected payload {:?}", json.payload));
    }
    Ok(())
}
