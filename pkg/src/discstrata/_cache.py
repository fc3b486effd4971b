import threading


class KeyedCache:
    """Memo table where each key is computed by exactly one thread.

    Readers of a key that is still being computed block on that key's lock
    instead of starting a duplicate computation.
    """

    def __init__(self):
        self._values = {}
        self._locks = {}
        self._guard = threading.Lock()

    def get(self, key, compute):
        try:
            return self._values[key]
        except KeyError:
            pass
        with self._guard:
            lock = self._locks.setdefault(key, threading.Lock())
        with lock:
            if key not in self._values:
                self._values[key] = compute()
            return self._values[key]

    def __contains__(self, key):
        return key in self._values

    def clear(self):
        with self._guard:
            self._values.clear()
            self._locks.clear()
