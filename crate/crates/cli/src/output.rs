//! Rendering of results in text, JSON and CSV.

use crate::{Context, Format, QuotientArgs};
use balanced_ideals::criteria::SymplecticChainReport;
use balanced_ideals::ideals::{Enumeration, QuotientListing};
use balanced_ideals::parabolic::Quotient;
use balanced_ideals::util::format_word;
use balanced_ideals::GroupTable;
use serde_json::json;

fn group_name(args: &QuotientArgs, quotient: &Quotient) -> String {
    args.group
        .type_label
        .clone()
        .unwrap_or_else(|| quotient.table().root_system().diagram().label().to_string())
}

fn listing_json(args: &QuotientArgs, quotient: &Quotient, result: &Enumeration) -> QuotientListing {
    QuotientListing {
        group_type: group_name(args, quotient),
        theta: quotient.theta().to_one_based(),
        eta: quotient.eta().to_one_based(),
        num_cosets: quotient.num_cosets(),
        fixed_point_free: result.fixed_point_free,
        count: result.count,
        ideals: result.reports.iter().map(|r| r.to_record()).collect(),
    }
}

pub(crate) fn print_count(
    ctx: &Context,
    args: &QuotientArgs,
    quotient: &Quotient,
    result: &Enumeration,
) {
    match ctx.format {
        Format::Text => {
            if result.complete {
                println!("{}", result.count);
            } else {
                println!(">= {} (incomplete: budget exceeded)", result.count);
            }
        }
        Format::Json => {
            let mut value = serde_json::to_value(listing_json(args, quotient, result)).unwrap();
            value["complete"] = json!(result.complete);
            value.as_object_mut().unwrap().remove("ideals");
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Csv => {
            println!("count,complete");
            println!("{},{}", result.count, result.complete);
        }
    }
}

pub(crate) fn print_exists(ctx: &Context, args: &QuotientArgs, quotient: &Quotient, exists: bool) {
    match ctx.format {
        Format::Text => println!("{exists}"),
        Format::Json => {
            let value = json!({
                "type": group_name(args, quotient),
                "theta": quotient.theta().to_one_based(),
                "eta": quotient.eta().to_one_based(),
                "num_cosets": quotient.num_cosets(),
                "exists": exists,
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Csv => {
            println!("exists");
            println!("{exists}");
        }
    }
}

pub(crate) fn print_list(
    ctx: &Context,
    args: &QuotientArgs,
    quotient: &Quotient,
    result: &Enumeration,
) {
    match ctx.format {
        Format::Json => {
            let mut value = serde_json::to_value(listing_json(args, quotient, result)).unwrap();
            value["complete"] = json!(result.complete);
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Csv => {
            println!("size,dimension,left_invariance,right_invariance,generators");
            for report in &result.reports {
                let record = report.to_record();
                println!(
                    "{},{},{},{},{}",
                    record.size,
                    record
                        .dimension
                        .map(|d| d.to_string())
                        .unwrap_or_default(),
                    record
                        .left_invariance
                        .map(join_spaces)
                        .unwrap_or_default(),
                    record
                        .right_invariance
                        .map(join_spaces)
                        .unwrap_or_default(),
                    report
                        .generator_words
                        .iter()
                        .map(|w| format_word(w))
                        .collect::<Vec<_>>()
                        .join("; "),
                );
            }
        }
        Format::Text => {
            println!(
                "type {}  theta {}  eta {}",
                group_name(args, quotient),
                quotient.theta().display_one_based(),
                quotient.eta().display_one_based()
            );
            println!(
                "cosets: {}  fixed_point_free: {}  count: {}{}",
                quotient.num_cosets(),
                result.fixed_point_free,
                result.count,
                if result.complete {
                    ""
                } else {
                    " (incomplete: budget exceeded)"
                }
            );
            if result.reports.is_empty() {
                return;
            }
            println!("{:<6} {:<10} {:<12} {:<12} generators", "size", "dimension", "left", "right");
            for report in &result.reports {
                let dim = report
                    .dimension
                    .map(|d| d.to_string())
                    .unwrap_or_else(|| "-".into());
                let left = report
                    .left_invariance
                    .map(|s| s.display_one_based())
                    .unwrap_or_else(|| "-".into());
                let right = report
                    .right_invariance
                    .map(|s| s.display_one_based())
                    .unwrap_or_else(|| "-".into());
                let gens = report
                    .generator_words
                    .iter()
                    .map(|w| format_word(w))
                    .collect::<Vec<_>>()
                    .join("; ");
                println!("{:<6} {:<10} {:<12} {:<12} {}", report.size, dim, left, right, gens);
            }
        }
    }
}

fn join_spaces(v: Vec<usize>) -> String {
    v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

pub(crate) fn print_mbcd(ctx: &Context, table: &GroupTable, value: u64) {
    match ctx.format {
        Format::Text => println!("{value}"),
        Format::Json => {
            let value = json!({
                "type": table.root_system().diagram().label(),
                "mbcd": value,
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Csv => {
            println!("mbcd");
            println!("{value}");
        }
    }
}

pub(crate) fn print_quotient_info(
    ctx: &Context,
    table: &GroupTable,
    quotient: &Quotient,
    limit: usize,
) {
    let action = quotient.w0_action().ok();
    match ctx.format {
        Format::Json => {
            let cosets: Vec<serde_json::Value> = (0..quotient.num_cosets().min(limit) as u32)
                .map(|c| {
                    let rep = quotient.rep(c);
                    json!({
                        "index": c,
                        "length": table.length(rep),
                        "word": table.reduced_word(rep).iter().map(|&a| a as u32 + 1).collect::<Vec<_>>(),
                        "w0_image": action.map(|a| a[c as usize]),
                    })
                })
                .collect();
            let value = json!({
                "type": table.root_system().diagram().label(),
                "theta": quotient.theta().to_one_based(),
                "eta": quotient.eta().to_one_based(),
                "num_cosets": quotient.num_cosets(),
                "w0_action_defined": action.is_some(),
                "fixed_point_free": quotient.has_fixed_point().ok().map(|f| !f),
                "is_chain": quotient.is_chain(),
                "cosets": cosets,
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Text | Format::Csv => {
            println!("type: {}", table.root_system().diagram().label());
            println!("theta: {}", quotient.theta().display_one_based());
            println!("eta: {}", quotient.eta().display_one_based());
            println!("num_cosets: {}", quotient.num_cosets());
            match action {
                Some(_) => {
                    println!("w0_action: defined");
                    println!(
                        "fixed_point_free: {}",
                        !quotient.has_fixed_point().unwrap()
                    );
                }
                None => println!("w0_action: undefined (iota(theta) != theta)"),
            }
            println!("is_chain: {}", quotient.is_chain());
            let shown = quotient.num_cosets().min(limit);
            println!("cosets (index length w0_image word), {shown} of {}:", quotient.num_cosets());
            for c in 0..shown as u32 {
                let rep = quotient.rep(c);
                let image = action
                    .map(|a| a[c as usize].to_string())
                    .unwrap_or_else(|| "-".into());
                println!(
                    "  {:<5} {:<6} {:<8} {}",
                    c,
                    table.length(rep),
                    image,
                    format_word(&table.reduced_word(rep))
                );
            }
        }
    }
}

pub(crate) fn print_sp_chain(ctx: &Context, report: &SymplecticChainReport) {
    match ctx.format {
        Format::Json => {
            let value = json!({
                "n": report.n,
                "num_cosets": report.num_cosets,
                "chain_order": "[k] <= [l] iff k >= l",
                "chain_order_verified": report.chain_order_ok,
                "w0_action": report.w0_action,
                "rep_lengths": report.rep_lengths,
                "rep_words": report
                    .rep_words
                    .iter()
                    .map(|w| w.iter().map(|&a| a as u32 + 1).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
                "count": report.count,
                "ideal": report.ideal,
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Text | Format::Csv => {
            println!("n: {}", report.n);
            println!("num_cosets: {}", report.num_cosets);
            println!(
                "chain_order ([k] <= [l] iff k >= l): {}",
                if report.chain_order_ok { "verified" } else { "FAILED" }
            );
            println!(
                "w0_action: {}",
                report
                    .w0_action
                    .iter()
                    .enumerate()
                    .map(|(k, img)| format!("[{k}]->[{img}]"))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            println!("reps (k length word):");
            for (k, word) in report.rep_words.iter().enumerate() {
                println!("  {:<4} {:<6} {}", k, report.rep_lengths[k], format_word(word));
            }
            println!("count: {}", report.count);
            if let Some(ideal) = &report.ideal {
                println!(
                    "ideal: {{{}}}",
                    ideal
                        .iter()
                        .map(|k| format!("[{k}]"))
                        .collect::<Vec<_>>()
                        .join(", ")
                );
            }
        }
    }
}
