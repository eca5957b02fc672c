import logging

from mie_ring.quantum import ledger as ledgerModule
from mie_ring.quantum.ledger import DiscrepancyLedger


def test_entries_are_logged_once(caplog):
    ledger = DiscrepancyLedger()
    with caplog.at_level(logging.INFO, logger="mie_ring.quantum.ledger"):
        ledger.record("sign", "stated form is negative")
        ledger.record("sign", "stated form is negative")
    assert ledger.entries() == {"sign": "stated form is negative"}
    assert len([record for record in caplog.records if "sign" in record.getMessage()]) == 1
    assert ledger.getDebugString() == ""


def test_debug_log(monkeypatch):
    monkeypatch.setattr(ledgerModule, "DEBUG", True)
    ledger = DiscrepancyLedger()
    ledger.record("prefactor", "missing\nfactor")
    ledger.record("sign", "negative")
    assert ledger.getDebugString() == "prefactor:\tmissing factor\nsign:\tnegative\n"
    assert ledger.getDebugString(key="sign") == "sign:\tnegative\n"
    assert ledger.getDebugString(withTime=True).count("\t") == 2
    ledger.clear()
    assert ledger.entries() == {}
    assert ledger.getDebugString() == ""
