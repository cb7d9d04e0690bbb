#![no_main]

use fplwb_core::algebra::PolynomialTable;
use fplwb_core::poly::ExactPolynomial;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = serde_json::from_str::<ExactPolynomial>(text) {
        let again: ExactPolynomial =
            serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        assert_eq!(again, p);
    }
    if let Ok(table) = PolynomialTable::from_json(text) {
        assert_eq!(PolynomialTable::from_json(&table.to_json()).unwrap(), table);
    }
});
