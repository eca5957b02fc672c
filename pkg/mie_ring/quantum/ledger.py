"""
Copyright 2026 The mie_ring Authors

Licensed under the MIT License. See the LICENSE file in the project root.
"""

import logging
import threading
from datetime import datetime
from typing import Optional

logger = logging.getLogger(__name__)

"""
With DEBUG = True every ledger entry is additionally stored with a timestamp.
The stored entries can be read back with getDebugString().
"""
DEBUG = False


class DiscrepancyLedger:
    """Record of the places where a stated closed form and its numerical oracle disagree.

    Each discrepancy has a key (for example ``"gegenbauer-recurrence"``) and is logged only once
    per process at INFO level. The ledger never changes a computed value, it only documents
    which closed form was replaced or accompanied by an oracle value.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._entries: dict[str, str] = dict()
        self.logData: list[dict] = []
        return

    def record(self, key: str, message: str) -> None:
        """Record a discrepancy.

        :param key: Short identifier of the closed form.
        :param message: Human readable description.
        """
        with self._lock:
            isNew = key not in self._entries
            if isNew:
                self._entries[key] = message
            if DEBUG:
                self.writeLog(key, message)
        if isNew:
            logger.info("discrepancy %s: %s", key, message)
        return

    def writeLog(self, key: str, message: str) -> None:
        """Write to the debug log.

        The time stamp is calculated automatically.

        :param key: The discrepancy key.
        :param message: The message.
        """
        log = dict()
        log["time"] = datetime.now().time()
        log["key"] = key
        log["message"] = message.replace("\n", " ")
        self.logData.append(log)
        return

    def getDebugString(self, withTime: bool = False, key: Optional[str] = None) -> str:
        """Read the debug log.

        :param withTime: Output of the time points. True means with time.
        :param key: Only entries with this key, None means all.
        :returns: One line per entry.
        """
        retval = ""
        for log in self.logData:
            if key is not None and log["key"] != key:
                continue
            if withTime:
                retval += str(log["time"]) + " "
            retval += log["key"] + ":\t" + log["message"] + "\n"
        return retval

    def entries(self) -> dict[str, str]:
        """Snapshot of all recorded discrepancies.

        :returns: Dictionary from key to message.
        """
        with self._lock:
            return dict(self._entries)

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()
            self.logData.clear()
        return


ledger = DiscrepancyLedger()
"""process wide ledger used by all modules of the package"""
