# padic-degrees, GPL-3.0 license
"""
Callback utils for verify.py
"""


class Callbacks:
    """
    Registry of actions fired at verification hooks

    Hooks and their arguments:
        on_verify_start(suite_names)
        on_suite_start(suite, bound)
        on_check_fail(suite, label)  # first failing check of a suite only
        on_suite_end(row)  # report row dict
        on_verify_end(report, ok)  # pandas DataFrame, all suites passed
    """

    def __init__(self):
        self._callbacks = {k: [] for k in ('on_verify_start', 'on_suite_start', 'on_check_fail', 'on_suite_end',
                                           'on_verify_end')}

    def register_action(self, hook, name='', callback=None):
        """
        Register an action to a hook, actions fire in registration order

        Args:
            hook: hook name, one of the keys above
            name: action name for later reference
            callback: callable receiving the hook arguments
        """
        assert hook in self._callbacks, f"hook '{hook}' not found in callbacks {list(self._callbacks)}"
        assert callable(callback), f"callback '{callback}' is not callable"
        if not any(x['name'] == name for x in self._callbacks[hook]) or not name:
            self._callbacks[hook].append({'name': name, 'callback': callback})

    def run(self, hook, *args, **kwargs):
        # Fire all actions of a hook, return the number fired
        assert hook in self._callbacks, f"hook '{hook}' not found in callbacks {list(self._callbacks)}"
        for action in self._callbacks[hook]:
            action['callback'](*args, **kwargs)
        return len(self._callbacks[hook])
