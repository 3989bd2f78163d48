from datetime import datetime


class TrialProgress:
    def __init__(self, total):
        self.total = total
        self.completed = 0
        self.failed = 0
        self.start_time = datetime.now()

    def increase(self, failed=False):
        self.completed += 1
        if failed:
            self.failed += 1

    @property
    def done(self):
        return self.completed >= self.total

    def to_dict(self):
        elapsed_time = (datetime.now() - self.start_time).total_seconds()
        if self.completed == 0 or elapsed_time == 0:
            return {
                "completed": self.completed,
                "total": self.total,
                "failed": self.failed,
                "time_elapsed": elapsed_time,
                "trials_per_second": 0,
            }
        return {
            "completed": self.completed,
            "total": self.total,
            "failed": self.failed,
            "time_elapsed": elapsed_time,
            "trials_per_second": self.completed / elapsed_time,
        }
