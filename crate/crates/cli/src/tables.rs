//! The published count tables, reproduced cell by cell.

use crate::{Context, Format};
use balanced_ideals::error::Error;
use balanced_ideals::parabolic::Quotient;
use balanced_ideals::{CoxeterDiagram, SimpleSet};
use clap::ValueEnum;
use serde_json::json;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum TableName {
    /// Counts in W_{Δ,{α_k}} of A_{n-1} (Grassmannians of SL(n)), even n.
    GrassmannianSl,
    /// Counts in W_{θ,η} of A4 for the ι-stable θ.
    A4Matrix,
    /// Counts in W_{{α_1..α_{p-1}},{α_k}} of B_p.
    SoPq,
    /// Counts in W_{{α_1,α_2},η} of F4.
    F4Row,
}

/// Column headers for the rank-4 η tables, in the published order.
const RANK4_COLUMNS: [&str; 15] = [
    "1234", "123", "134", "124", "234", "12", "13", "14", "23", "24", "34", "1", "2", "3", "4",
];

fn subset_from_digits(digits: &str) -> SimpleSet {
    SimpleSet::from_indices(digits.chars().map(|c| c.to_digit(10).unwrap() as usize - 1))
}

/// One enumerated table cell; None means the budget cut it short, with the
/// partial count inside.
type Cell = Result<u64, u64>;

struct TableData {
    row_labels: Vec<String>,
    column_labels: Vec<String>,
    cells: Vec<Vec<Option<Cell>>>,
}

fn count_cell(ctx: &Context, quotient: &Quotient) -> Result<Cell, Error> {
    let result = ctx.enumerate(quotient, false, None, None)?;
    Ok(if result.complete {
        Ok(result.count)
    } else {
        Err(result.count)
    })
}

pub(crate) fn run_table(
    ctx: &Context,
    name: TableName,
    max_n: usize,
    max_p: usize,
    allow_stretch: bool,
) -> Result<i32, Error> {
    let data = match name {
        TableName::GrassmannianSl => grassmannian_sl(ctx, max_n)?,
        TableName::A4Matrix => a4_matrix(ctx)?,
        TableName::SoPq => so_pq(ctx, max_p, allow_stretch)?,
        TableName::F4Row => f4_row(ctx)?,
    };
    let complete = data
        .cells
        .iter()
        .flatten()
        .flatten()
        .all(|cell| cell.is_ok());
    print_table(ctx, &data);
    if !complete {
        eprintln!("warning: some cells hit the time budget; counts shown are lower bounds");
    }
    Ok(if complete { 0 } else { 1 })
}

fn grassmannian_sl(ctx: &Context, max_n: usize) -> Result<TableData, Error> {
    if max_n < 2 {
        return Err(Error::InvalidArgument("--max-n must be at least 2".into()));
    }
    let columns: Vec<usize> = (1..max_n).step_by(2).collect();
    let mut data = TableData {
        row_labels: Vec::new(),
        column_labels: columns.iter().map(|k| format!("k={k}")).collect(),
        cells: Vec::new(),
    };
    for n in (2..=max_n).step_by(2) {
        let diagram = CoxeterDiagram::parse(&format!("A{}", n - 1))?;
        let table = ctx.table_for(&diagram)?;
        let full = SimpleSet::full(n - 1);
        let mut row = Vec::new();
        for &k in &columns {
            if k >= n {
                row.push(None);
                continue;
            }
            let quotient =
                Quotient::new(table.clone(), full, SimpleSet::from_indices([k - 1]))?;
            row.push(Some(count_cell(ctx, &quotient)?));
        }
        data.row_labels.push(format!("n={n}"));
        data.cells.push(row);
    }
    Ok(data)
}

fn a4_matrix(ctx: &Context) -> Result<TableData, Error> {
    let diagram = CoxeterDiagram::parse("A4")?;
    let table = ctx.table_for(&diagram)?;
    let thetas = ["1234", "14", "23"];
    let mut data = TableData {
        row_labels: thetas.iter().map(|s| s.to_string()).collect(),
        column_labels: RANK4_COLUMNS.iter().map(|s| s.to_string()).collect(),
        cells: Vec::new(),
    };
    for theta in thetas {
        let theta = subset_from_digits(theta);
        let mut row = Vec::new();
        for eta in RANK4_COLUMNS {
            let quotient = Quotient::new(table.clone(), theta, subset_from_digits(eta))?;
            row.push(Some(count_cell(ctx, &quotient)?));
        }
        data.cells.push(row);
    }
    Ok(data)
}

fn so_pq(ctx: &Context, max_p: usize, allow_stretch: bool) -> Result<TableData, Error> {
    if max_p < 2 {
        return Err(Error::InvalidArgument("--max-p must be at least 2".into()));
    }
    if max_p > 6 && !allow_stretch {
        return Err(Error::InvalidArgument(
            "p > 6 takes hours; pass --allow-stretch to compute it".into(),
        ));
    }
    let columns: Vec<usize> = (1..=max_p).collect();
    let mut data = TableData {
        row_labels: Vec::new(),
        column_labels: columns.iter().map(|k| format!("k={k}")).collect(),
        cells: Vec::new(),
    };
    for p in 2..=max_p {
        let diagram = CoxeterDiagram::parse(&format!("B{p}"))?;
        let table = ctx.table_for(&diagram)?;
        let theta = SimpleSet::from_indices(0..p - 1);
        let mut row = Vec::new();
        for &k in &columns {
            if k > p {
                row.push(None);
                continue;
            }
            let quotient =
                Quotient::new(table.clone(), theta, SimpleSet::from_indices([k - 1]))?;
            row.push(Some(count_cell(ctx, &quotient)?));
        }
        data.row_labels.push(format!("p={p}"));
        data.cells.push(row);
    }
    Ok(data)
}

fn f4_row(ctx: &Context) -> Result<TableData, Error> {
    let diagram = CoxeterDiagram::parse("F4")?;
    let table = ctx.table_for(&diagram)?;
    let theta = SimpleSet::from_indices([0, 1]);
    let mut row = Vec::new();
    for eta in RANK4_COLUMNS {
        let quotient = Quotient::new(table.clone(), theta, subset_from_digits(eta))?;
        row.push(Some(count_cell(ctx, &quotient)?));
    }
    Ok(TableData {
        row_labels: vec!["12".to_string()],
        column_labels: RANK4_COLUMNS.iter().map(|s| s.to_string()).collect(),
        cells: vec![row],
    })
}

fn cell_text(cell: &Option<Cell>) -> String {
    match cell {
        None => String::new(),
        Some(Ok(count)) => count.to_string(),
        Some(Err(partial)) => format!(">={partial}"),
    }
}

fn print_table(ctx: &Context, data: &TableData) {
    match ctx.format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = data
                .row_labels
                .iter()
                .zip(&data.cells)
                .map(|(label, cells)| {
                    json!({
                        "row": label,
                        "counts": cells
                            .iter()
                            .map(|c| match c {
                                None => json!(null),
                                Some(Ok(n)) => json!(n),
                                Some(Err(p)) => json!({ "lower_bound": p }),
                            })
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            let value = json!({
                "columns": data.column_labels,
                "rows": rows,
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Csv => {
            println!(",{}", data.column_labels.join(","));
            for (label, cells) in data.row_labels.iter().zip(&data.cells) {
                let row: Vec<String> = cells.iter().map(cell_text).collect();
                println!("{label},{}", row.join(","));
            }
        }
        Format::Text => {
            let mut widths: Vec<usize> = data.column_labels.iter().map(|c| c.len()).collect();
            for cells in &data.cells {
                for (i, cell) in cells.iter().enumerate() {
                    widths[i] = widths[i].max(cell_text(cell).len());
                }
            }
            let label_width = data
                .row_labels
                .iter()
                .map(|l| l.len())
                .max()
                .unwrap_or(0);
            print!("{:<label_width$}", "");
            for (label, width) in data.column_labels.iter().zip(&widths) {
                print!("  {label:>width$}");
            }
            println!();
            for (label, cells) in data.row_labels.iter().zip(&data.cells) {
                print!("{label:<label_width$}");
                for (cell, width) in cells.iter().zip(&widths) {
                    print!("  {:>width$}", cell_text(cell));
                }
                println!();
            }
        }
    }
}
