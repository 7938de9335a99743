use packings::experiments::ode_check_power_spec;

fn main() {
    for (r, mx, mz) in [(0, 4, 8), (1, 3, 8), (2, 6, 16)] {
        let report = ode_check_power_spec(r, mx, mz);
        println!(
            "r = {r}, x-degree <= {mx}, z-degree <= {mz}: {} coefficients, {}",
            report.coefficients_checked,
            if report.holds { "holds" } else { "fails" }
        );
    }
}
