//! Run a small verification campaign from code: random instances meeting
//! the connectivity hypotheses, factor search, verification, and the
//! proof-step inequality scan.
//!
//! ```bash
//! cargo run --example theorem_campaign
//! ```

use pfk::harness::{run_campaign, CampaignConfig, CampaignMode};

fn main() {
    for (mode, m) in [(CampaignMode::Even, 2), (CampaignMode::Odd, 1)] {
        let config = CampaignConfig {
            mode,
            m_values: vec![m],
            instances: vec![25],
            n_min: 6,
            n_max: 12,
            seed: 7,
            t_samples: 200,
            ..CampaignConfig::default()
        };
        let summary = run_campaign(&config).unwrap();
        println!(
            "{mode} m={m}: {} instances, {} passes, {} hypothesis misses, {} defects, {} proof-step violations",
            summary.reports.len(),
            summary.passes,
            summary.hypothesis_misses,
            summary.defects,
            summary.proof_step_violations.len()
        );
        let slowest = summary
            .reports
            .iter()
            .map(|r| r.elapsed_ms)
            .max()
            .unwrap_or(0);
        println!(
            "  slowest instance: {slowest} ms; clean = {}",
            summary.is_clean()
        );
    }

    // tightness mode replays the sharp construction instead of random graphs
    let config = CampaignConfig {
        mode: CampaignMode::Tightness,
        m_values: vec![2],
        instances: vec![1],
        ..CampaignConfig::default()
    };
    let summary = run_campaign(&config).unwrap();
    for report in &summary.tightness {
        println!(
            "tightness m={}{}: lambda={} delta_at_hubs={} factor_at_m={} factor_above={}",
            report.m,
            if report.probe { " (odd probe)" } else { "" },
            report.lambda,
            report.delta_at_hubs,
            report.exists_at_m,
            report.exists_above
        );
    }
}
