import io

from src.utils.progress_bar import update_progress_bar


class TestProgressBar:
    def test_draws_on_stderr(self, capsys):
        update_progress_bar(1, 2, prefix='THM_MS', length=10)

        captured = capsys.readouterr()
        assert captured.out == ''
        assert captured.err == '\rTHM_MS |█████-----| 50.0% Complete\r'


    def test_finishes_the_line(self):
        stream = io.StringIO()

        update_progress_bar(2, 2, length=4, stream=stream)

        assert stream.getvalue().endswith('|████| 100.0% Complete\r\n')


    def test_nothing_to_do(self, capsys):
        update_progress_bar(0, 0)

        assert capsys.readouterr().err == ''
