#![no_main]

use fplwb_core::tfpl::TTable;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(table) = TTable::from_json(text) {
        assert_eq!(TTable::from_json(&table.to_json()).unwrap(), table);
    }
});
