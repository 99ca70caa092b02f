//! Benchmark table: one row per `(instance, solver)`.
//!
//! Columns: `family, size, seed, solver, m, rank, esn, iterations,
//! independence_tests, wall_ms`. Rows are sorted by
//! `(family, size, seed, solver)`; only `wall_ms` varies between runs.

use std::io::Write;
use std::ops::RangeInclusive;
use std::time::Instant;

use esn_core::matroid::IndependenceOracle;
use esn_core::oracle::random::GenerateError;
use esn_core::solvers::{SolveError, Solver};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::generate::{generate_instance, Family};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub family: &'static str,
    pub size: usize,
    pub seed: u64,
    pub solver: Solver,
    pub m: usize,
    pub rank: usize,
    pub esn: usize,
    pub iterations: u64,
    pub independence_tests: u64,
    pub wall_ms: f64,
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub families: Vec<Family>,
    pub seeds: RangeInclusive<u64>,
    pub solvers: Vec<Solver>,
    pub costs: RangeInclusive<i64>,
    pub enumeration_cap: u128,
}

pub fn benchmark(config: &BenchConfig) -> Result<Vec<BenchRow>, BenchError> {
    let jobs: Vec<(&Family, u64)> = config
        .families
        .iter()
        .flat_map(|f| config.seeds.clone().map(move |s| (f, s)))
        .collect();
    let nested: Vec<Vec<BenchRow>> = jobs
        .par_iter()
        .map(|&(family, seed)| -> Result<Vec<BenchRow>, BenchError> {
            let file = generate_instance(seed, family, &config.costs)?;
            let (instance, costs) = file
                .build()
                .map_err(|e| GenerateError::InvalidParameter(e.to_string()))?;
            config
                .solvers
                .iter()
                .map(|&solver| {
                    let start = Instant::now();
                    let report = solver.run(&instance, &costs, config.enumeration_cap)?;
                    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
                    Ok(BenchRow {
                        family: family.name(),
                        size: family.size(),
                        seed,
                        solver,
                        m: instance.ground_size(),
                        rank: instance.rank_of(),
                        esn: report.esn_points.len(),
                        iterations: report.stats.iterations,
                        independence_tests: report.stats.independence_tests,
                        wall_ms,
                    })
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let mut rows: Vec<BenchRow> = nested.into_iter().flatten().collect();
    rows.sort_by(|a, b| (a.family, a.size, a.seed, a.solver).cmp(&(b.family, b.size, b.seed, b.solver)));
    Ok(rows)
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<(), BenchError> {
    let mut writer = csv::Writer::from_writer(out);
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush().map_err(csv::Error::from)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::default_costs;
    use esn_core::matroid::DEFAULT_ENUMERATION_CAP;

    #[test]
    fn row_count_and_order() {
        let config = BenchConfig {
            families: [10, 20, 40].map(|n| Family::graphic_with_degree(n, 4.0)).to_vec(),
            seeds: 1..=5,
            solvers: vec![Solver::Tailored, Solver::Dichotomic],
            costs: default_costs(),
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        };
        let rows = benchmark(&config).unwrap();
        assert_eq!(rows.len(), 30);
        assert_eq!((rows[0].size, rows[0].seed, rows[0].solver), (10, 1, Solver::Tailored));
        for pair in rows.chunks(2) {
            assert_eq!(pair[0].esn, pair[1].esn);
        }
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("family,size,seed,solver,m,rank,esn,iterations,independence_tests,wall_ms\n"));
        assert_eq!(text.lines().count(), 31);
    }

    #[test]
    fn unit_costs_give_one_point() {
        let config = BenchConfig {
            families: vec![Family::Graphic { n: 6, p: 1.0 }],
            seeds: 1..=2,
            solvers: Solver::ALL.to_vec(),
            costs: 1..=1,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        };
        for row in benchmark(&config).unwrap() {
            assert_eq!(row.esn, 1, "{row:?}");
        }
    }
}
