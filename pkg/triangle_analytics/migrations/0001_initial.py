# Generated by Django 4.2.20 on 2026-10-17 10:12

from django.db import migrations, models
import django.db.models.deletion
import django.utils.timezone
import model_utils.fields


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='BenchmarkSweep',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('created', model_utils.fields.AutoCreatedField(default=django.utils.timezone.now, editable=False, verbose_name='created')),
                ('modified', model_utils.fields.AutoLastModifiedField(default=django.utils.timezone.now, editable=False, verbose_name='modified')),
                ('graph_label', models.CharField(blank=True, help_text='Input path or generator spec.', max_length=255)),
                ('algorithm', models.CharField(max_length=64)),
                ('n', models.PositiveBigIntegerField()),
                ('m', models.PositiveBigIntegerField()),
                ('total', models.PositiveBigIntegerField(help_text='Triangle count every run agreed on.')),
                ('best_k', models.PositiveIntegerField()),
                ('repeat', models.PositiveIntegerField(default=1)),
            ],
            options={
                'ordering': ['-created'],
            },
        ),
        migrations.CreateModel(
            name='BenchmarkSweepRow',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('k', models.PositiveIntegerField()),
                ('high_degree_count', models.PositiveBigIntegerField()),
                ('millis', models.FloatField()),
                ('sweep', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='rows', to='triangle_analytics.benchmarksweep')),
            ],
            options={
                'ordering': ['sweep', 'k'],
            },
        ),
        migrations.AddConstraint(
            model_name='benchmarksweeprow',
            constraint=models.UniqueConstraint(fields=('sweep', 'k'), name='uniq_sweep_k'),
        ),
    ]
